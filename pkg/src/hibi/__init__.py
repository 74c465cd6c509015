"""Hibi rings of finite distributive lattices.

The regularity of the Hibi ideal of ``L = I(P)`` is ``|P| - rank P``.  This
package computes it together with the Birkhoff correspondence, a brute-force
Hilbert series oracle that checks it, and a census of small posets.
"""

from .birkhoff import (Lattice, birkhoff_roundtrip, ideal_lattice, is_distributive,
                       join_irreducibles, lattice_from_poset)
from .canon import canonical_form, is_isomorphic
from .census import (CensusQuery, census, enumerate_posets, figure1_family,
                     figure2_lattices)
from .config import Caps
from .errors import *  # noqa: F401,F403
from .invariants import (HibiPresentation, InvariantReport, a_invariant,
                         has_linear_resolution, hibi_generators, invariant_report,
                         is_extremal_gorenstein, is_gorenstein, krull_dim, proj_dim,
                         regularity, two_chain_regularity)
from .oracle import (HilbertSummary, canonical_min_degree, dim_oracle, gorenstein_oracle,
                     h_polynomial, hilbert_function)
from .poset import (BOTTOM, TOP, DepthFunction, Poset, depth_function, is_pure, is_simple,
                    max_chain, order_ideals, poset_from_relations, rank, simplify)

__version__ = "0.1.0"
