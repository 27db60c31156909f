"""Magic, bi-magic and m-magic labelings of anti-fuzzy and bipolar anti-fuzzy paths."""

from .constructions import (
    Scheme,
    admissible,
    block_of_edge,
    expected_constants,
    generate,
    generate_bimagic,
    generate_bipolar_m_magic,
    generate_bipolar_magic,
    generate_m_magic,
    generate_magic,
    offset_c,
)
from .model import (
    AdmissibilityReport,
    BipolarPathLabeling,
    CaseTag,
    CheckReport,
    LabelRangeError,
    MagicSpectrum,
    PathLabeling,
    Violation,
    bipolar_edge_sums,
    edge_sum,
)
from .numerics import (
    InadmissibleError,
    Kind,
    ScaledValue,
    ScaleMismatchError,
    parse_decimal,
    scale_band,
    select_scale,
    to_decimal_string,
)
from .verification import (
    Mode,
    NegativeRule,
    SpectrumError,
    check_anti_fuzzy,
    check_bipolar_anti_fuzzy,
    conformance,
    extract_spectrum,
    verify_m_magic,
)

__version__ = "0.1.0"
