"""Solvers, FPT deciders and reduction gadgets for weak odd domination."""

from .bounds import (
    decide_kappa_at_least,
    decide_kappa_prime_at_most,
    decide_kappa_q_at_least,
    greedy_trace,
    greedy_wod,
)
from .graph import (
    Graph,
    bipartition,
    complement,
    disjoint_copies,
    from_edge_list,
    isolated_vertices,
    max_degree,
    parse_graph,
    strip_isolated,
    universal_vertices,
)
from .kernel import (
    NonWodCertificate,
    WodCertificate,
    even_set,
    is_wod,
    is_wod_bruteforce,
    kappa,
    kappa_at_least,
    kappa_prime,
    kappa_prime_at_most,
    kappa_q,
    odd_neighborhood,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "NonWodCertificate",
    "WodCertificate",
    "bipartition",
    "complement",
    "decide_kappa_at_least",
    "decide_kappa_prime_at_most",
    "decide_kappa_q_at_least",
    "disjoint_copies",
    "even_set",
    "from_edge_list",
    "greedy_trace",
    "greedy_wod",
    "is_wod",
    "is_wod_bruteforce",
    "isolated_vertices",
    "kappa",
    "kappa_at_least",
    "kappa_prime",
    "kappa_prime_at_most",
    "kappa_q",
    "max_degree",
    "odd_neighborhood",
    "parse_graph",
    "strip_isolated",
    "universal_vertices",
    "verify_certificate",
]
