"""Exception types raised across the package.

Class names are part of the public interface: the command-line front end
reports them verbatim in its diagnostics.
"""


class MinkqmError(Exception):
    """Base class for every domain error raised by this package."""


# geometry
class DegenerateMetric(MinkqmError):
    pass


class OutOfDomain(MinkqmError):
    pass


class LightLikePoint(MinkqmError):
    pass


class FocalPoint(MinkqmError):
    pass


class NonSymmetricMetric(MinkqmError, ValueError):
    pass


# surfaces of revolution
class ArcLengthViolation(MinkqmError):
    pass


class WrongCausalCharacter(MinkqmError):
    pass


class DivisionByZero(MinkqmError, ZeroDivisionError):
    """A closed form was evaluated where the profile meets the rotation axis."""


class NonIntegerEll(MinkqmError, ValueError):
    pass


class GridTooCoarse(MinkqmError, ValueError):
    pass


# spectral
class NotConverged(MinkqmError):
    pass


class SingularChannel(MinkqmError):
    pass


class UnstableStep(MinkqmError):
    pass


class GridMismatch(MinkqmError, ValueError):
    pass


# configuration
class ConfigParse(MinkqmError):
    pass


class UnknownProfile(MinkqmError, KeyError):
    def __str__(self):
        # KeyError.__str__ would repr() the message
        return Exception.__str__(self)
