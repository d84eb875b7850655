"""Regular functions of a quaternion variable: series ring, slice calculus, verification."""
from .errors import (
    CullenError,
    InvalidConfig,
    NearZero,
    NotReal,
    NotUnit,
    OnRealAxis,
    OutOfDomain,
    ParseError,
    PolarSingularity,
    SymmetrizationZero,
    UnknownSuite,
)
from .quaternion import Quaternion, cullen_decompose, iota_frame, qinv, qmul
from .series import (
    QSeries,
    RSeries,
    closed_formula_eval,
    evaluate,
    reciprocal,
    regular_conjugate,
    star_mul,
    symmetrization,
)
from .fields import Points, SliceFunction
from .calculus import (
    SliceDomain,
    is_hyperholomorphic,
    proper_form,
    star_field,
    star_pointwise,
)

__version__ = "0.1.0"

__all__ = [
    "CullenError", "InvalidConfig", "NearZero", "NotReal", "NotUnit", "OnRealAxis",
    "OutOfDomain", "ParseError", "PolarSingularity", "SymmetrizationZero", "UnknownSuite",
    "Quaternion", "cullen_decompose", "iota_frame", "qinv", "qmul",
    "QSeries", "RSeries", "closed_formula_eval", "evaluate", "reciprocal",
    "regular_conjugate", "star_mul", "symmetrization",
    "Points", "SliceFunction", "SliceDomain", "is_hyperholomorphic", "proper_form",
    "star_field", "star_pointwise",
]
