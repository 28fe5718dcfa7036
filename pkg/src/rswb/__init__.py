"""Reed-Solomon decoding workbench over GF(2^m).

Syndromeless (interpolation + partial GCD) and syndrome-based decoders
with direct and fast implementations, instrumented so measured field
operation counts can be checked against closed-form complexity models.
"""

from .counting import OpCounts
from .gf2m import Field, FieldError, DEFAULT_MODULI
from .cantor import CantorBasis, CantorError, cantor_init, cantor_mul, mpe, mpi
from .newton import inv_mod_xk, fast_divmod, DivisionError
from .euclid import (EeaResult, StopRule, EuclidError, eea_classic, eta,
                     feea, bound_feea)
from .rs import (RsCode, RsError, DecodeResult, ErasureSpec, ImplConfig,
                 DEFAULT_CONFIG, CASE_STUDY_CONFIG, rs_new, rs_encode,
                 rs_decode, rs_decode_gao, rs_decode_gao_mod,
                 rs_decode_syndrome, rs_decode_erasures, corrupt_word,
                 worst_case_word)
from .complexity import (overall_cost, formula_direct, hw_model,
                         rate_thresholds, bound_cantor, bound_mpe_mpi,
                         case_study_report, measure_mul_cost)

__version__ = "0.1.0"

__all__ = [
    "OpCounts", "Field", "FieldError", "DEFAULT_MODULI",
    "CantorBasis", "CantorError", "cantor_init", "cantor_mul", "mpe", "mpi",
    "inv_mod_xk", "fast_divmod", "DivisionError",
    "EeaResult", "StopRule", "EuclidError", "eea_classic", "eta", "feea",
    "bound_feea",
    "RsCode", "RsError", "DecodeResult", "ErasureSpec", "ImplConfig",
    "DEFAULT_CONFIG", "CASE_STUDY_CONFIG", "rs_new", "rs_encode",
    "rs_decode", "rs_decode_gao", "rs_decode_gao_mod", "rs_decode_syndrome",
    "rs_decode_erasures", "corrupt_word", "worst_case_word",
    "overall_cost", "formula_direct", "hw_model", "rate_thresholds",
    "bound_cantor", "bound_mpe_mpi", "case_study_report", "measure_mul_cost",
]
