"""Wave-graph bases of SL(n)-invariant tensors, with exact verification."""

from .graphs import WaveGraph, enumerate_graphs, graph_to_word, validate, word_to_graph
from .ltris import GameState, StandardTableau, play, tableau_to_word, word_to_tableau
from .partitions import decompose, dim_irrep, hook_count, invariant_dimension, tau, tensor_step
from .tensors import SparseTensor, invariant_tensor, leading_term, permute_tensor, product, wedge_form
from .verify import certify, oracle_invariant_dimension
from .words import enumerate_balanced, is_lattice

__version__ = "0.1.0"
