"""Glue between the combinatorial classifier and the geometric oracle."""
from __future__ import annotations

from .classifier import ClassificationReport, classify, iter_witnesses
from .geometry import (
    Facet,
    enumerate_facets,
    is_fano,
    is_gorenstein,
    is_simplicial,
    is_smooth_geometric,
    is_terminal,
)
from .polytope import PolytopeVertexSet, build_vertex_set
from .poset import Poset


def oracle_report(p: Poset) -> tuple[PolytopeVertexSet, list[Facet], dict]:
    """Vertex set, facets, and the five geometric flags of the polytope."""
    vs = build_vertex_set(p.hat())
    facets = enumerate_facets(vs.vectors)
    flags = {
        "fano": is_fano(vs.vectors, facets),
        "terminal": is_terminal(vs.vectors, facets),
        "gorenstein": is_gorenstein(facets),
        "simplicial": is_simplicial(facets),
        "smooth": is_smooth_geometric(vs.vectors, facets),
    }
    return vs, facets, flags


def classify_geometric(p: Poset) -> ClassificationReport:
    """Classification computed purely by exact geometry.

    A combinatorial witness walk is attached when the polytope is not
    simplicial, so the report keeps its witness-iff-not-Q-factorial
    shape.
    """
    _, _, flags = oracle_report(p)
    witness = None
    if not flags["simplicial"]:
        witness = next(iter_witnesses(p.hat()), None)
    return ClassificationReport(
        d=p.d,
        fano=flags["fano"],
        terminal=flags["terminal"],
        gorenstein=flags["gorenstein"],
        q_factorial=flags["simplicial"],
        smooth=flags["smooth"],
        method="geometric",
        witness=witness,
    )


def find_disagreement(p: Poset) -> dict | None:
    """Compare classifier flags against the oracle; None when they agree."""
    report = classify(p)
    _, _, flags = oracle_report(p)
    mismatches = {}
    if report.q_factorial != flags["simplicial"]:
        mismatches["q_factorial"] = (report.q_factorial, flags["simplicial"])
    if report.smooth != flags["smooth"]:
        mismatches["smooth"] = (report.smooth, flags["smooth"])
    for name in ("fano", "terminal", "gorenstein"):
        if not flags[name]:
            mismatches[name] = (True, False)
    return mismatches or None
