"""Bounds for fields of definition of arithmetic Kleinian reflection groups."""

from ._kernels import BACKEND
from .bounds import BoundsReport, degree_bound, discriminant_bound
from .classgroup import ClassGroupSummary, ReducedForm, class_number, two_class_data
from .lfunc import RealBracket, dedekind_zeta_two, l_two_chi
from .numtheory import FundamentalDiscriminant, enumerate_fundamental_discriminants
from .pipeline import EnumerationReport, FieldRecord, enumerate_admissible, vinberg_filter

__version__ = "0.1.0"
