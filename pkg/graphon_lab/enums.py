"""Helper constants."""

# pylint: disable=missing-class-docstring
from enum import Enum, IntEnum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11

    class StrEnum(str, Enum):
        """Backport of enum.StrEnum."""

        __str__ = str.__str__
        __format__ = str.__format__

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


class GraphonFamily(StrEnum):
    BILINEAR = "bilinear"
    BLOCK = "block"
    CONSTANT = "constant"
    CUSTOM = "custom"
    GRID = "grid"

    def __str__(self):
        return str(self.value)


class SamplingMode(StrEnum):
    """How latent positions are chosen."""

    RANDOM = "random"
    DETERMINISTIC = "deterministic"


class StageTag(StrEnum):
    """Randomness stages, one independent stream each."""

    LATENTS = "latents"
    THINNING = "thinning"


class Metric(StrEnum):
    BOUNDS = "bounds"
    MU2_PAIR = "mu2_pair"
    PROP1 = "prop1"
    PROP2 = "prop2"
    RESISTANCE = "resistance"
    THM1 = "thm1"


class BoundResult(StrEnum):
    """Inequalities checked on a realization."""

    PROP1 = "prop1"
    PROP2 = "prop2"
    THM1 = "thm1"
    THM2 = "thm2"
    THM2_REALIZED = "thm2_realized"
    DEGREE_WEIGHTED = "degree_weighted"
    DEGREE_SIMPLE = "degree_simple"
    OPERATOR_WEIGHTED = "operator_weighted"
    OPERATOR_SIMPLE = "operator_simple"
    MIN_DEGREE = "min_degree"
    EIGENVALUE_DEVIATION = "eigenvalue_deviation"
    MU2_PAIR = "mu2_pair"


class Monotonicity(StrEnum):
    NONDECREASING = "nondecreasing"
    NONINCREASING = "nonincreasing"
    NONE = "none"


class Figure(StrEnum):
    """Figure series emitted by the lab."""

    PIXEL = "pixel"
    EIGENVALUE_DISTANCE = "eigenvalue_distance"
    SPECTRAL_GAP_DIFFERENCE = "spectral_gap_difference"
    SPECTRAL_GAP_LIMIT = "spectral_gap_limit"
    RESISTANCE = "resistance"
    RESISTANCE_RELATIVE_ERROR = "resistance_relative_error"


class RecordStatus(StrEnum):
    OK = "ok"
    PARTIAL = "partial"
    FAILED = "failed"


class ExitCode(IntEnum):
    """Process exit codes of the command line tools."""

    SUCCESS = 0
    USAGE = 1
    NUMERICAL = 2
