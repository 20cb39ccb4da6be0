"""Hole covers, local chordalization and the non-chordality index."""

from .graph import (Graph, GraphError, ParseError, apply_edits,
                    induced_subgraph, parse_edge_list, serialize)
from .holes import (HoleComponents, HoleSet, IncompleteHoleSetError,
                    MinCoverResult, enumerate_holes, hole_components,
                    holes_through, is_hole_cover, min_hole_cover,
                    set_satisfies_nc, vertex_satisfies_nc)
from .chordalize import (ChainTrace, ChainValidationError,
                         ChordalizationPartition, NCViolationError,
                         NotAHoleCoverError, clique_growth_condition, hat,
                         is_minimal_completion, locally_chordalize, run_chain,
                         validate_partition)
from .index import (AnalysisReport, IndexResult, ReportOptions, bound_report,
                    exact_index, greedy_index_upper_bound)
from .oracles import (Correspondence, EflCertificate, EliminationOrdering,
                      ListAssignment, NotChordalError, OracleLimitError,
                      check_efl_instance, chordal_clique_and_coloring,
                      chromatic_number, clique_number, contains_join_subgraph,
                      degeneracy, degeneracy_and_cover_numbers,
                      dp_chromatic_tiny, dp_colorable, has_clique_minor,
                      independence_number, is_chordal, is_chordal_with_peo,
                      list_colorable, maximal_cliques, maximum_clique)
from .generators import (GeneratedGraph, GeneratorSpec, compose, cycle,
                         complete, complete_multipartite, efl_near_pencil,
                         empty, generate, paper_fig1, paper_fig5, path,
                         random_graph, sharpness_instance)

__version__ = "0.1.0"
