"""Self-dual quasi-cyclic and generalized quasi-cyclic binary codes."""

from ._sdgqc import (
    BudgetExceeded,
    FormatError,
    InfeasibleCensus,
    LinearCode,
    bound_check,
    census,
    crt_components,
    cubic_code,
    dual,
    entropy,
    interleave,
    inverse_entropy,
    is_gqc_invariant,
    is_self_dual,
    is_type_ii,
    m_sd_binary,
    m_sd_hermitian16,
    max_distance,
    min_distance,
    n_sd_binary,
    n_sd_hermitian16,
    quintic_code,
    quintic_map,
    run_cli,
    s_type2,
    sample_self_dual,
    t_type2,
    weight_tally,
)

__all__ = [name for name in dir() if not name.startswith("_")]
