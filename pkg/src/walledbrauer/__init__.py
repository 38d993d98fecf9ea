"""Exact computational algebra around the walled Brauer category.

Subpackages cover: finite combinatorics (set pairs, matchings, labeled
partitions), the diagram category itself, the labeled-partition functors
with their determinant twist, exact rational linear algebra, mixed tensor
representations of GL_n(Z), the coend/Kan-extension engine, the presented
exterior-algebra quotient, the (2,1)-valent directed graph calculus, and
symmetric-group character tables with GL multiplicity extraction.
"""

__version__ = "0.1.0"

from .combinatorics import (Bipartition, BipartiteMatching, FiniteSetPair,
                            LabeledPartition, SignedPermutation, UNLABELED,
                            enumerate_bipartitions, enumerate_labeled_partitions,
                            enumerate_matchings)
from .brauer import (DiagramGeneratorWord, WalledDiagram, compose,
                     factor_into_generators, is_downward, tensor)
from .partition_functors import (DetGenerator, PartitionVector, StandardShape,
                                 apply_P, apply_det, day_product, kan_decompose,
                                 standardize, wheeled_model_check)

__all__ = [name for name in dir() if not name.startswith("_")]
