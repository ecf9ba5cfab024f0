"""Pulsed harmonic potential: classical kicked particle, Gaussian wave
packet, and directed polymer line, backed by the C++ core."""

from ._core import (  # noqa: F401
    classical,
    continuum,
    moebius,
    offcenter,
    oracles,
    polymer,
    quantum,
    scan,
    verify,
)

__all__ = [
    "classical",
    "continuum",
    "moebius",
    "offcenter",
    "oracles",
    "polymer",
    "quantum",
    "scan",
    "verify",
]

__version__ = "0.1.0"
