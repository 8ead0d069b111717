"""Structured report documents.

Every CLI subcommand emits one JSON document with a ``schema_version`` field;
the helpers here convert between report dataclasses and plain dicts whose
field order is fixed, so serialized output is stable and diff-friendly and
round-trips losslessly.
"""

import json
from fractions import Fraction

from kholo.branches import BranchReport, FiberSample
from kholo.cartan import CartanReport, RestrictionCheck
from kholo.eliminate import EliminationReport
from kholo.exprio import format_gaussian, parse_gaussian, parse_poly, print_poly
from kholo.polynomials import SparsePoly, VarSpace
from kholo.simplicial import PLPath, SimplicialComplex, Subcomplex

SCHEMA_VERSION = 1
TOOL_NAME = "kholo"


def document(command, inputs, result, exit_code):
    from kholo import __version__
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": __version__},
        "command": command,
        "inputs": inputs,
        "exit_code": exit_code,
        "result": result,
    }


def dumps(doc):
    return json.dumps(doc, indent=2) + "\n"


# -- scalars and polynomials ----------------------------------------------------

def fraction_to_doc(value):
    return str(Fraction(value))


def fraction_from_doc(text):
    return Fraction(text)


def gaussian_to_doc(value):
    return format_gaussian(value)


def gaussian_from_doc(text):
    return parse_gaussian(text)


def point_to_doc(point):
    return [gaussian_to_doc(c) for c in point]


def space_to_doc(space):
    return {"names": list(space.names), "n": space.n}


def space_from_doc(doc):
    return VarSpace(doc["names"], doc["n"])


def poly_to_doc(p):
    return {"space": space_to_doc(p.space), "text": print_poly(p)}


def poly_from_doc(doc):
    return parse_poly(doc["text"], space_from_doc(doc["space"]))


# -- reports --------------------------------------------------------------------

def cartan_report_to_doc(report):
    return {
        "real_part": poly_to_doc(report.real_part),
        "candidate": poly_to_doc(report.candidate),
        "residual": poly_to_doc(report.residual),
        "g": poly_to_doc(report.g),
        "pluriharmonic": report.pluriharmonic,
        "reconstructed": report.reconstructed,
    }


def cartan_report_from_doc(doc):
    return CartanReport(
        real_part=poly_from_doc(doc["real_part"]),
        candidate=poly_from_doc(doc["candidate"]),
        residual=poly_from_doc(doc["residual"]),
        g=poly_from_doc(doc["g"]),
        pluriharmonic=doc["pluriharmonic"],
        reconstructed=doc["reconstructed"],
    )


def restriction_check_to_doc(check):
    return {
        "recover_lhs": poly_to_doc(check.recover_lhs),
        "recover_rhs": poly_to_doc(check.recover_rhs),
        "recover_ok": check.recover_ok,
        "real_part_lhs": poly_to_doc(check.real_part_lhs),
        "real_part_rhs": poly_to_doc(check.real_part_rhs),
        "real_part_ok": check.real_part_ok,
    }


def restriction_check_from_doc(doc):
    return RestrictionCheck(
        recover_lhs=poly_from_doc(doc["recover_lhs"]),
        recover_rhs=poly_from_doc(doc["recover_rhs"]),
        recover_ok=doc["recover_ok"],
        real_part_lhs=poly_from_doc(doc["real_part_lhs"]),
        real_part_rhs=poly_from_doc(doc["real_part_rhs"]),
        real_part_ok=doc["real_part_ok"],
    )


def elimination_report_to_doc(report):
    return {
        "basepoint_x": [str(v) for v in report.basepoint_x],
        "basepoint_y": [str(v) for v in report.basepoint_y],
        "q1": poly_to_doc(report.q1),
        "q2": poly_to_doc(report.q2),
        "annihilator": poly_to_doc(report.annihilator),
        "degenerate": report.degenerate,
    }


def elimination_report_from_doc(doc):
    return EliminationReport(
        basepoint_x=tuple(int(v) for v in doc["basepoint_x"]),
        basepoint_y=tuple(int(v) for v in doc["basepoint_y"]),
        q1=poly_from_doc(doc["q1"]),
        q2=poly_from_doc(doc["q2"]),
        annihilator=poly_from_doc(doc["annihilator"]),
        degenerate=doc["degenerate"],
    )


def branch_report_to_doc(report):
    return {
        "p": poly_to_doc(report.p),
        "discriminant": poly_to_doc(report.discriminant),
        "samples": [
            {
                "point": point_to_doc(s.point),
                "on_locus": s.on_locus,
                "fiber_count": s.fiber_count,
            }
            for s in report.samples
        ],
        "covering_degree": report.covering_degree,
    }


def branch_report_from_doc(doc):
    return BranchReport(
        p=poly_from_doc(doc["p"]),
        discriminant=poly_from_doc(doc["discriminant"]),
        samples=[
            FiberSample(
                point=tuple(gaussian_from_doc(c) for c in s["point"]),
                on_locus=s["on_locus"],
                fiber_count=s["fiber_count"],
            )
            for s in doc["samples"]
        ],
        covering_degree=doc["covering_degree"],
    )


def path_to_doc(path):
    return {
        "waypoints": [[str(c) for c in point] for point in path.waypoints],
        "tags": list(path.tags),
    }


def path_from_doc(doc):
    return PLPath(
        waypoints=tuple(tuple(Fraction(c) for c in point)
                        for point in doc["waypoints"]),
        tags=tuple(doc["tags"]),
    )


# -- simplicial input documents ---------------------------------------------------

def complex_to_doc(complex_, sub):
    return {
        "ambient_dim": complex_.dim,
        "vertices": [[str(c) for c in v] for v in complex_.vertices],
        "top": [list(s) for s in complex_.top],
        "marked": [list(f) for f in sub.marked],
        "endpoints": [sub.start, sub.end],
    }


def complex_from_doc(doc):
    complex_ = SimplicialComplex(
        dim=doc["ambient_dim"],
        vertices=[[Fraction(c) for c in v] for v in doc["vertices"]],
        top=[tuple(s) for s in doc["top"]],
    )
    start, end = doc["endpoints"]
    sub = Subcomplex(complex_, [tuple(f) for f in doc["marked"]], start, end)
    return complex_, sub
