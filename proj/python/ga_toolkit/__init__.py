"""Vertex-degree-based topological indices of simple graphs.

Thin wrapper over the C++ core: graph construction, parsing (edge list and
graph6), the index panel (GA1, Zagreb, Randic, general Randic, log NK*),
every bound check with tightness classification, and the exhaustive /
random verification sweeps.
"""

from ga_toolkit._core import (  # noqa: F401
    BoundCheck,
    DegreeStats,
    Graph,
    ParseError,
    PreconditionError,
    SamplingError,
    SearchResult,
    SweepReport,
    check_all,
    check_cor_mis29,
    check_cor_nk3,
    check_cor_randic,
    check_eq1,
    check_one,
    check_t_end2,
    check_t_lb55,
    check_t_mz,
    check_t_mz2,
    check_t_mzz,
    check_t_nk3,
    check_t_p4bis,
    check_t_r,
    check_t_z1,
    degree_stats,
    encode_graph6,
    enumerate_connected,
    exhaustive_sweep,
    extremal_search,
    g_edge,
    ga1,
    general_randic,
    h_edge,
    is_connected,
    log_nk_star,
    m1,
    m2,
    parse_edge_list,
    parse_graph6,
    random_connected,
    random_sweep,
    randic,
    s_thm4_reference_lower,
)

__version__ = "0.1.0"
