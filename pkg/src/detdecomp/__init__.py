"""Exact rank decompositions of the n x n determinant tensor."""

__version__ = "0.1.0"

from .errors import (CapExceeded, CharTooSmall, CharTwoError, CountMismatch, DetDecompError,
                     DivisionByZero, FieldError, FieldMismatch, IndexOutOfRange,
                     InvalidPermutation, NotPrimeError, OrderMismatch, ParseError)
from .fields import GF, QQ, Field, field_validate, scalar_half
from .formulas import (DecomposableTerm, Decomposition, LinearVector, Provenance, best_known,
                       derksen3, det4, enumerate_pair_indices, even_general, laplace_lift,
                       leibniz, rank_bound)
from .tensor import SparseTensor, permutation_sign, sign, tensor_add_term, tensor_equal
from .verify import VerificationReport, bell_number, expand, rank_bound_table, verify
from .evaluate import Matrix, det_oracle, eval_count_mults, eval_decomposition
from .polyforms import chow_to_waring, expand_poly, poly_equal_det, to_chow
from .io import read_decomposition, write_decomposition
