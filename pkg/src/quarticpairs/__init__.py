"""Quartic rings from pairs of integral ternary quadratic forms.

The core correspondence lives in `forms` (the quadratic and cubic form
types, the group action, the resolvent map) and `rings` (multiplication
tables, the table construction, basis changes, discriminants).  The
verification layers are `universal` (exact identities in the 12 generic
coefficients), `cech` (localized sections, the generator table, and the
connecting-map charts), and `oracle` (numerical spectra at the four
intersection points).  `cli` wires everything to the `quarticpairs`
console script.
"""

from .forms import (BinaryCubicForm, DoubleTernaryForm, GammaElement,
                    TernaryQuadraticForm, act_gamma, compose_gamma,
                    disc_binary_cubic, pair_from_json_dict,
                    pair_to_json_dict, resolvent_cubic_form)
from .rings import (BasisChange, CubicRingTable, InternalConsistencyError,
                    QuarticRingTable, apply_basis_change,
                    binary_cubic_from_cubic_ring, check_associativity,
                    check_resolvent_identity, cubic_ring_from_binary_cubic,
                    dual_change, find_basis_change, normalize_quartic_table,
                    pair_from_based_quartic, quartic_ring_from_pair,
                    ring_discriminant)

__version__ = "0.1.0"

__all__ = [
    "BinaryCubicForm", "DoubleTernaryForm", "GammaElement",
    "TernaryQuadraticForm", "act_gamma", "compose_gamma",
    "disc_binary_cubic", "pair_from_json_dict", "pair_to_json_dict",
    "resolvent_cubic_form",
    "BasisChange", "CubicRingTable", "InternalConsistencyError",
    "QuarticRingTable", "apply_basis_change", "binary_cubic_from_cubic_ring",
    "check_associativity", "check_resolvent_identity",
    "cubic_ring_from_binary_cubic", "dual_change", "find_basis_change",
    "normalize_quartic_table", "pair_from_based_quartic",
    "quartic_ring_from_pair", "ring_discriminant",
]
