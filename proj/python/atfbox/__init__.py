"""Box representations and cubicity bounds for AT-free graphs.

Thin wrappers on top of the compiled ``_core`` module: representation and
bound reports cross the boundary as JSON strings and are decoded to dicts
here.
"""

import json as _json

from ._core import (  # noqa: F401
    CapError,
    Graph,
    InternalError,
    ParseError,
    PreconditionError,
    bfs_layers,
    bounds_json,
    boxrep_json,
    chromatic_boxrep_json,
    claw_number,
    color,
    connected_components,
    decompose,
    diametral_dominating_pair,
    exact_boxicity,
    exact_chordality,
    exact_cubicity,
    find_asteroidal_triple,
    generate,
    girth,
    graph6_decode,
    graph6_encode,
    is_at_free,
    is_chordal,
    is_dominating_pair,
    is_interval,
    is_minimal_triangulation,
    is_unit_interval,
    maximal_cliques_chordal,
    minimize_triangulation,
    parse_edge_list,
    split_supergraph,
    triangulation_claw_probe,
    verify_json,
    write_edge_list,
)

__version__ = "0.1.0"


def boxrep(g, method="auto"):
    """Certified box representation of an AT-free graph, as a dict in the
    representation file schema."""
    return _json.loads(boxrep_json(g, method))


def chromatic_boxrep(g, colors, k):
    """k-dimensional representation from a proper coloring (one dimension per
    color class)."""
    return _json.loads(chromatic_boxrep_json(g, colors, k))


def verify(g, rep):
    """Check a representation dict against g; returns a list of violation
    strings (empty = exact)."""
    return verify_json(g, _json.dumps(rep))


def bounds(g, exact=False):
    """Cubicity bound report for an AT-free graph, as a dict."""
    return _json.loads(bounds_json(g, exact))
