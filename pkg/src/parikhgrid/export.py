"""Serialization: versioned JSON for every report type, DOT for grids, and
a plain table format for covering-word results.

Every report kind round-trips: dict_to_report(report_to_dict(x)) == x.
"""

import json
from fractions import Fraction

from .covering import BoundsReport, CoverReport, KnownVerdict, MincovReport
from .errors import InvalidInput
from .grid import layout_2d
from .realize import RealizabilityResult
from .search import SearchOutcome, SearchStats

SCHEMA = 1


def _vec(p):
    return list(p)


def _vecs(ps):
    return [list(p) for p in ps]


def report_to_dict(obj):
    """Serialize any report dataclass to a schema-stamped dict."""
    if isinstance(obj, CoverReport):
        return {
            "schema": SCHEMA, "kind": "cover_report",
            "k": obj.k, "sigma": obj.sigma, "word": obj.word,
            "is_covering": obj.is_covering, "is_pdb": obj.is_pdb,
            "excess": obj.excess,
            "missing": _vecs(obj.missing),
            "duplicated": [{"vector": _vec(p), "multiplicity": m}
                           for p, m in obj.duplicated],
        }
    if isinstance(obj, BoundsReport):
        return {
            "schema": SCHEMA, "kind": "bounds_report",
            "k": obj.k, "sigma": obj.sigma,
            "pdb_length": obj.pdb_length,
            "counting_bound": obj.counting_bound,
            "shortest_lower_bound": obj.shortest_lower_bound,
            "pdb_possible_by_bounds": obj.pdb_possible_by_bounds,
            "uc_divisibility": obj.uc_divisibility,
            "known_verdict": {"verdict": obj.known_verdict.verdict,
                              "reason": obj.known_verdict.reason},
        }
    if isinstance(obj, SearchOutcome):
        return {
            "schema": SCHEMA, "kind": "search_outcome",
            "k": obj.k, "sigma": obj.sigma, "target": obj.target,
            "status": obj.status, "witness": obj.witness,
            "minimal": obj.minimal, "refuted_up_to": obj.refuted_up_to,
            "stats": {"nodes": obj.stats.nodes, "elapsed": obj.stats.elapsed,
                      "max_depth": obj.stats.max_depth},
        }
    if isinstance(obj, RealizabilityResult):
        return {
            "schema": SCHEMA, "kind": "realizability_result",
            "k": obj.k, "sigma": obj.sigma, "realizable": obj.realizable,
            "witness": obj.witness,
            "refutation": (None if obj.refutation is None else
                           {"component_a": _vecs(obj.refutation[0]),
                            "component_b": _vecs(obj.refutation[1])}),
        }
    if isinstance(obj, MincovReport):
        return {
            "schema": SCHEMA, "kind": "mincov_report",
            "k": obj.k, "sigma": obj.sigma, "max_len": obj.max_len,
            "numerator": obj.value.numerator,
            "denominator": obj.value.denominator,
            "estimate_only": obj.estimate_only,
            "minimizing_word": obj.minimizing_word,
            "words_enumerated": obj.words_enumerated,
        }
    raise InvalidInput("cannot serialize %r" % type(obj).__name__)


def dict_to_report(d):
    """Inverse of report_to_dict."""
    kind = d.get("kind")
    if kind == "cover_report":
        return CoverReport(
            k=d["k"], sigma=d["sigma"], word=d["word"],
            is_covering=d["is_covering"], is_pdb=d["is_pdb"],
            excess=d["excess"],
            missing=tuple(tuple(p) for p in d["missing"]),
            duplicated=tuple((tuple(e["vector"]), e["multiplicity"])
                             for e in d["duplicated"]),
        )
    if kind == "bounds_report":
        return BoundsReport(
            k=d["k"], sigma=d["sigma"], pdb_length=d["pdb_length"],
            counting_bound=d["counting_bound"],
            shortest_lower_bound=d["shortest_lower_bound"],
            pdb_possible_by_bounds=d["pdb_possible_by_bounds"],
            uc_divisibility=d["uc_divisibility"],
            known_verdict=KnownVerdict(verdict=d["known_verdict"]["verdict"],
                                       reason=d["known_verdict"]["reason"]),
        )
    if kind == "search_outcome":
        return SearchOutcome(
            k=d["k"], sigma=d["sigma"], target=d["target"],
            status=d["status"], witness=d["witness"], minimal=d["minimal"],
            refuted_up_to=d["refuted_up_to"],
            stats=SearchStats(nodes=d["stats"]["nodes"],
                              elapsed=d["stats"]["elapsed"],
                              max_depth=d["stats"]["max_depth"]),
        )
    if kind == "realizability_result":
        ref = d["refutation"]
        return RealizabilityResult(
            realizable=d["realizable"], k=d["k"], sigma=d["sigma"],
            witness=d["witness"],
            refutation=(None if ref is None else
                        (tuple(tuple(p) for p in ref["component_a"]),
                         tuple(tuple(p) for p in ref["component_b"]))),
        )
    if kind == "mincov_report":
        return MincovReport(
            k=d["k"], sigma=d["sigma"], max_len=d["max_len"],
            value=Fraction(d["numerator"], d["denominator"]),
            estimate_only=d["estimate_only"],
            minimizing_word=d["minimizing_word"],
            words_enumerated=d["words_enumerated"],
        )
    raise InvalidInput("unknown report kind %r" % (kind,))


def to_json(obj, indent=2):
    return json.dumps(report_to_dict(obj), indent=indent)


def from_json(text):
    return dict_to_report(json.loads(text))


# -- grid exports -----------------------------------------------------------


def grid_to_dict(grid, include_directed=False):
    vertices = grid.vertices()
    pos = None
    if grid.sigma == 3:
        pos = layout_2d(grid)
    out = {
        "schema": SCHEMA, "kind": "grid",
        "k": grid.k, "sigma": grid.sigma,
        "vertex_count": grid.vertex_count,
        "undirected_edge_count": grid.undirected_edge_count(),
        "bow_count": grid.bow_count(),
        "vertices": [
            {"rank": i, "vector": _vec(p),
             **({"pos": [pos[p][0], pos[p][1]]} if pos else {})}
            for i, p in enumerate(vertices)
        ],
        "undirected_edges": [[grid.rank(p), grid.rank(q)]
                             for p, q in grid.undirected_edges()],
        "bows": [{"vertex": grid.rank(p), "letter": label.out_letter}
                 for p in vertices for label in grid.bows(p)],
    }
    if include_directed:
        out["directed_edges"] = [
            {"from": grid.rank(p), "to": grid.rank(q),
             "out": lab.out_letter, "in": lab.in_letter}
            for p, q, lab in grid.directed_edges()
        ]
    return out


def grid_to_dot(grid):
    """Undirected DOT rendering: vector-labeled nodes (positioned for
    sigma=3), each neighbor edge once, bows as letter-labeled self-loops."""
    from .vectors import format_vector

    pos = layout_2d(grid) if grid.sigma == 3 else None
    lines = ["graph grid_k%d_s%d {" % (grid.k, grid.sigma),
             "  node [shape=circle];"]
    for i, p in enumerate(grid.vertices()):
        attrs = ['label="%s"' % format_vector(p)]
        if pos is not None:
            attrs.append('pos="%.4f,%.4f!"' % pos[p])
        lines.append("  v%d [%s];" % (i, " ".join(attrs)))
    for p, q in grid.undirected_edges():
        lines.append("  v%d -- v%d;" % (grid.rank(p), grid.rank(q)))
    for p in grid.vertices():
        for label in grid.bows(p):
            lines.append('  v%d -- v%d [label="%s"];'
                         % (grid.rank(p), grid.rank(p), label.out_letter))
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- table format -----------------------------------------------------------

_TABLE_HEADER = ("sigma", "k", "word", "length", "pdb", "excess")


def cover_table(reports):
    """Plain table with columns sigma | k | word | length | pdb | excess."""
    rows = [_TABLE_HEADER]
    for r in reports:
        excess = "-" if r.excess is None else str(r.excess)
        pdb = "yes" if r.is_pdb else ("no" if r.is_covering else "not covering")
        rows.append((str(r.sigma), str(r.k), r.word, str(len(r.word)), pdb,
                     excess))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines) + "\n"
