"""Exact Seifert-matrix invariants and interval bookkeeping for tau and s."""

from .algebra import (IntMatrix, LaurentPoly, is_perfect_square, normalize_alexander,
                      poly_matrix_det, symmetric_signature)
from .invariants import (InvariantReport, alexander, arf, genus, is_alexander_one,
                         knot_determinant, signature, slice_obstructions)
from .ledger import (AxiomStore, BoundedValue, KnotRecord, Verdict, band_move_update,
                     connect_sum, known_double, summand_rank3_certificate, tau_neq_s_half,
                     topologically_slice)
from .seifert import (V1, V2, BandMoveClaim, SeifertMatrix, direct_sum, double_seifert,
                      is_band_move, validate)

__version__ = "0.1.0"
