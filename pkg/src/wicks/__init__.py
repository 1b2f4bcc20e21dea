"""Oriented maximal Wicks forms: validation, moves, censuses and exact counts."""

from .census import Census, census_stats, enumerate_backtrack, enumerate_constructive
from .counting import count_table, m1, m2, m3, m6, surface_table, totals
from .geometry import extremal_geometry, gauss_bonnet_check
from .moves import (alpha_construct, beta_construct, gamma_construct, ih_transform,
                    reduce)
from .symmetry import automorphisms, order2_fixed_edges, order3_fixed_vertices
from .topology import dual, glue, vertex_signs
from .words import (Letter, WicksForm, Word, canonicalize, is_isomorphic, parse,
                    serialize, validate)

__version__ = "0.1.0"
