"""Exact enumeration of standard Young tableaux of skew and strip shapes.

Cross-validated counting by linear-extension dynamic programming, the
Aitken determinant, and zig-zag-number determinant formulas, plus an
exact order-polytope volume engine and floating-point verification of the
transfer-operator eigensystems.
"""

from .errors import (BudgetExceeded, ContainmentError, CostGuard,
                     IntegralityError, LimitExceeded, SandwichError,
                     ShapeError, SpecError, SytError)
from .numbers import (RatSeries, SeqTable, bernoulli_numbers,
                      euler_tangent_numbers, scaled_a, seq_table,
                      series_coefficients, zigzag_numbers)
from .shapes import (Partition, SkewShape, StripSpec, Tableau, as_skew_shape,
                     format_shape, make_skew, parse_shape_text,
                     random_skew_shape, ribbon_from_descents, strip_shape,
                     tableau_to_updown, updown_shape)
from .counting import (count_descent_class, count_syt_aitken,
                       count_syt_backtrack, count_syt_dp,
                       count_updown_bruteforce, downset_count, enumerate_syt)
from .formulas import (alpha_beta, alpha_descents, beta_descents, count_3strip,
                       count_4strip, count_5strip, count_strip, strip_spec_3,
                       strip_spec_4, strip_spec_5, x_coeff, y_coeff)
from .polytope import (MultiPoly, elkies_apply, elkies_inner,
                       order_polytope_volume, poly_integrate,
                       schur_recursion_check, schur_section_volume)
from .spectral import (EigenMode, QuadratureGrid, apply_transfer_numeric,
                       eigenfunction_values, i_integral_check,
                       principal_product_check, spectral_series_check,
                       strip_modes, verify_eigensystem, x_series_check)

__version__ = "0.1.0"
