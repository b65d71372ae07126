"""Generation and analysis of cycle permutation graphs."""

from .ccpm import Constraints, Split, generate
from .graph import Graph, decode_graph6, encode_graph6
from .orderly import generate_orderly

__all__ = ["Constraints", "Split", "Graph", "decode_graph6", "encode_graph6", "generate", "generate_orderly"]
__version__ = "0.1.0"
