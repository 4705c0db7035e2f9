"""Quasi-shuffle Hopf algebras, multiple zeta values, and the Fourier
expansion of (stuffle regularized) multiple Eisenstein series."""

from .words import (FreePoly, check_index, decode_xy, encode_xy, parse_word,
                    subspace_of, weight, word_str)
from .hopf import (STUFFLE, TRIVIAL, antipode, antipode_word, convolve,
                   convolve_many, coproduct, product_z, quasi_shuffle,
                   shuffle_xy, shuffle_z, stuffle)
from .mzv import EvalError, MzvElem, NumericConfig, mzv_eq_numeric, mzv_value
from .regularize import (TPoly, antipode_mzv_combination, reg_decompose,
                         rho_apply, rho_matrix, zeta_reg)
from .qexp import (FourierExpansion, QSeries, fourier_expansion, g_series,
                   ghat_series, gstar_series, gstar_terms, monotangent_series,
                   multitangent_reduce)
from .numeric import (ConvergenceError, DomainError, EvalContext, C_map,
                      g_value, ghat_trunc, gstar_numeric, hurwitz_limit,
                      hurwitz_trunc, mes_star, mes_trunc, mes_value,
                      multitangent_trunc, multitangent_value, psi_star,
                      qseries_eval, zeta_minus_trunc, zeta_star)

__version__ = "0.1.0"
