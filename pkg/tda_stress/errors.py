"""Exception hierarchy shared by all pipeline stages."""


class TdaStressError(Exception):
    """Base class for every error raised by the package."""


class InvalidConfig(TdaStressError, ValueError):
    """Configuration failed validation or names an unavailable feature."""


class IoError(TdaStressError, OSError):
    """Reading or writing a pipeline artifact failed."""


class CorpusFormatError(TdaStressError, ValueError):
    """A corpus or feature file does not follow the documented schema."""


# signal
class NonCommensurateRates(TdaStressError, ValueError):
    """No integer interpolate-then-decimate path links two sampling rates."""


class WindowTooLong(TdaStressError, ValueError):
    """A window or subwindow is longer than the series it is cut from."""


class DimensionTooLarge(TdaStressError, ValueError):
    """A delay embedding dimension exceeds the subwindow length."""


class InsufficientSubwindows(TdaStressError, ValueError):
    """Fewer subwindow feature rows than subwindows per window."""


# homology
class EmptyCloud(TdaStressError, ValueError):
    """Rips persistence requested for a point cloud without points."""


class EmptySeries(TdaStressError, ValueError):
    """Level-set persistence requested for an empty series."""


# diagrams
class WrongDiagramCount(TdaStressError, ValueError):
    """A subwindow vector needs exactly ten diagrams."""


# learn
class AllColumnsDropped(TdaStressError, ValueError):
    """Pruning removed every feature column."""


class SingularCovariance(TdaStressError, ArithmeticError):
    """The regularized pooled covariance could not be factorized."""


class SingleSubject(TdaStressError, ValueError):
    """Leave-one-subject-out needs at least two subjects."""


class ConditionTooShort(TdaStressError, ValueError):
    """A condition has no window on one side of its temporal midpoint."""


class InvalidLabels(TdaStressError, ValueError):
    """The labels do not define a classification problem."""


class NotConverged(UserWarning):
    """The SVM solver stopped at its epoch limit before meeting tolerance."""
