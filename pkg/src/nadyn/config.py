"""Global configuration values and the package's exception classes."""

from dataclasses import dataclass


class NadynError(Exception):
    """Base class for errors raised by this package."""


class SpaceMismatch(NadynError):
    pass


class PrecisionError(NadynError):
    """A comparison on the circle stayed undecided at the precision cap."""


class HorizonError(NadynError):
    pass


class FixtureError(NadynError):
    """A fixture failed its own build-time identity checks."""


@dataclass
class Settings:
    # default horizon for checkers and the CLI
    horizon: int = 512
    # hard cap on any horizon or iterate length
    max_horizon: int = 2048
    # starting precision of the alpha enclosure, in bits (width 2**-bits)
    precision_bits: int = 64
    # refinement stops here and raises PrecisionError
    precision_cap_bits: int = 8192


settings = Settings()


def check_horizon(n: int) -> int:
    if n < 0 or n > settings.max_horizon:
        raise HorizonError(f"horizon {n} outside [0, {settings.max_horizon}]")
    return n
