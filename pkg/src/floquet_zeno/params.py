"""Physical parameters of the driven emitter-waveguide model.

Units: hbar = 1 throughout; every energy, rate, and inverse time is
quoted in units of the cavity hopping xi unless a caller rescales.
The emitter has splitting omega and is driven as A cos(nu t); the
waveguide is a ring of n_cavities sites with eigenfrequency omega_c,
hopping xi, and emitter-field coupling g.

Derived quantities: detuning delta = omega_c - omega, drive ratio
chi = A / nu, drive period T = 2 pi / nu.
"""

import math
from dataclasses import dataclass

from .errors import ConfigError, Negative, NonPositive, ZeroCavities

CONFIG_KEYS = ("omega", "omega_c", "xi", "g", "n_cavities", "drive_amp", "drive_freq")


@dataclass(frozen=True)
class SystemParams:
    omega: float
    omega_c: float
    xi: float
    g: float
    n_cavities: int
    drive_amp: float
    drive_freq: float

    @property
    def delta(self) -> float:
        return self.omega_c - self.omega

    @property
    def chi(self) -> float:
        return self.drive_amp / self.drive_freq

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.drive_freq


def validate(params: SystemParams) -> SystemParams:
    """Reject non-physical values; returns the (immutable) input unchanged.

    Idempotent by construction: derived fields are properties of the
    frozen dataclass, so there is nothing to populate twice.
    """
    if not params.xi > 0.0:
        raise NonPositive("xi", params.xi)
    if not params.drive_freq > 0.0:
        raise NonPositive("drive_freq", params.drive_freq)
    if params.g < 0.0:
        raise Negative("g", params.g)
    if params.drive_amp < 0.0:
        raise Negative("drive_amp", params.drive_amp)
    if params.n_cavities < 1:
        raise ZeroCavities(params.n_cavities)
    return params


def default_sideband(params: SystemParams) -> int:
    """The integer n minimizing |delta + n nu|.

    Ties prefer smaller |n|, then negative n. The winner satisfies
    delta + n nu in [-nu/2, nu/2] up to the tie boundary.
    """
    nu = params.drive_freq
    guess = round(-params.delta / nu)
    candidates = range(guess - 2, guess + 3)
    return min(candidates, key=lambda n: (abs(params.delta + n * nu), abs(n), n))


def parse_config(text: str) -> dict:
    """Parse `key = value` lines into a field dict.

    Blank lines and lines starting with '#' are skipped. Keys outside
    CONFIG_KEYS are an error; n_cavities must parse as an integer.
    """
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            out[key] = int(value) if key == "n_cavities" else float(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value {value!r} for {key}") from None
    return out


def from_mapping(fields: dict) -> SystemParams:
    """Build and validate SystemParams from a complete field mapping."""
    missing = [k for k in CONFIG_KEYS if k not in fields]
    if missing:
        raise ConfigError(f"missing parameter(s): {', '.join(missing)}")
    unknown = [k for k in fields if k not in CONFIG_KEYS]
    if unknown:
        raise ConfigError(f"unknown parameter(s): {', '.join(unknown)}")
    return validate(
        SystemParams(
            omega=float(fields["omega"]),
            omega_c=float(fields["omega_c"]),
            xi=float(fields["xi"]),
            g=float(fields["g"]),
            n_cavities=int(fields["n_cavities"]),
            drive_amp=float(fields["drive_amp"]),
            drive_freq=float(fields["drive_freq"]),
        )
    )
