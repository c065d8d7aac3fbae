"""Arthur packets of real unitary groups U(p, q) as exact combinatorial data."""

from .errors import (
    DimensionMismatch,
    NonIntegralExponent,
    ParameterError,
    SignatureMismatch,
    UnpairedBadFactor,
)
from .packet import (
    ComponentGroup,
    LambdaChar,
    Packet,
    PacketEntry,
    Range,
    Status,
    build_packet,
    component_group,
    count_decompositions,
    enumerate_decompositions,
    epsilon_char,
    epsilon_factors,
    eta_decomposition,
    good_range_check,
    iter_entries,
    lambda_char,
    nonvanishing_screen,
)
from .params import (
    ClassicalFactor,
    ClassicalGroupKind,
    GoodParityParam,
    Parity,
    UnitaryFactor,
    UnitaryParameter,
    classify_parity_classical,
    classify_parity_unitary,
    sort_canonical,
    split_parity,
    validate_parameter,
)
from .reduce import (
    GLBlockClassical,
    GLBlockU,
    InductionDatum,
    ZeroPacket,
    component_group_transfer,
    delta_u_twist,
    inf_char_blocks,
    parity_shift_check,
    reduce_classical,
    reduce_unitary,
    rho_sharp,
)
from .rootdata import (
    LeviData,
    Root,
    SignatureDecomposition,
    delta_l_d,
    delta_l_pq,
    levi_data,
    roots_of_l,
    roots_sp,
    t_vector,
)

__version__ = "0.1.0"
