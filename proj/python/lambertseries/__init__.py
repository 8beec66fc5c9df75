"""Lambert series evaluation engines and number-theoretic scans."""

from ._core import (
    EULER_GAMMA,
    MERTENS_H,
    ArithTable,
    build_table,
    dseries_direct,
    dseries_reciprocal_form,
    ei_symmetric_combo,
    eval_lambert,
    exp_integral_ei,
    identity_residual,
    mertens_report,
    prime_zeta,
    singularity_probe,
    tauber_h,
    voronoi_rhs,
    wigert_eval,
    wigert_expansion,
    zeta_real,
)

__all__ = [
    "EULER_GAMMA",
    "MERTENS_H",
    "ArithTable",
    "build_table",
    "dseries_direct",
    "dseries_reciprocal_form",
    "ei_symmetric_combo",
    "eval_lambert",
    "exp_integral_ei",
    "identity_residual",
    "mertens_report",
    "prime_zeta",
    "singularity_probe",
    "tauber_h",
    "voronoi_rhs",
    "wigert_eval",
    "wigert_expansion",
    "zeta_real",
]

__version__ = "0.1.0"
