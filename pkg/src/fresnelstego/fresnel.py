"""Unitary discrete Fresnel propagation.

Propagation over distance d at wavelength w is a frequency-domain filter:
each spectral bin at discrete frequency (nu_x, nu_y), in cycles per meter
with nu = k / (N * pitch), is multiplied by the unit-modulus factor

    exp(-i * pi * w * d * (nu_x**2 + nu_y**2))

and transformed back. Unit modulus makes the operation exactly unitary.
The exponent sign is a convention; the inverse applies the conjugate
factor, so round trips cancel exactly either way. Wavelength and distance
enter only through their product, which is the effective key scalar.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ShapeError
from .numerics import ComplexGrid, as_field, fft2, ifft2, is_power_of_two


def _checked_length(name: str, value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ParameterError(f"{name} must be a real number") from None
    if not math.isfinite(v):
        raise ParameterError(f"{name} must be finite, got {v!r}")
    return v


@dataclass(frozen=True)
class FresnelParams:
    """Propagation geometry, all lengths in meters.

    wavelength and pitch must be positive; distance may be zero, which
    makes propagation the identity. tau is derived on access, never stored.
    """

    wavelength: float
    distance: float
    pitch: float

    def __post_init__(self):
        for name in ("wavelength", "distance", "pitch"):
            object.__setattr__(self, name, _checked_length(name, getattr(self, name)))
        if self.wavelength <= 0.0:
            raise ParameterError(f"wavelength must be positive, got {self.wavelength}")
        if self.pitch <= 0.0:
            raise ParameterError(f"pitch must be positive, got {self.pitch}")
        if self.distance < 0.0:
            raise ParameterError(f"distance must be non-negative, got {self.distance}")

    @property
    def tau(self) -> float:
        """Characteristic scale sqrt(wavelength * distance)."""
        return math.sqrt(self.wavelength * self.distance)


def _require_square_power_of_two(field: np.ndarray) -> None:
    r, c = field.shape
    if r != c or not is_power_of_two(r):
        raise ShapeError(f"field must be square with a power-of-two side, got {r}x{c}")


def _transfer_phase(side: int, params: FresnelParams) -> np.ndarray:
    nu = np.fft.fftfreq(side, d=params.pitch)
    return np.pi * params.wavelength * params.distance * (nu[:, None] ** 2 + nu[None, :] ** 2)


def propagate(field, params: FresnelParams) -> ComplexGrid:
    """Forward Fresnel transform of a square power-of-two field."""
    f = as_field(field)
    _require_square_power_of_two(f)
    if params.wavelength * params.distance == 0.0:
        # the transfer factor is identically one; skip the FFT pair so the
        # degenerate case is bit-exact, not merely close
        return f.copy()
    return ifft2(fft2(f) * np.exp(-1j * _transfer_phase(f.shape[0], params)))


def propagate_inverse(field, params: FresnelParams) -> ComplexGrid:
    """Exact inverse of propagate: the conjugate transfer factor."""
    f = as_field(field)
    _require_square_power_of_two(f)
    if params.wavelength * params.distance == 0.0:
        return f.copy()
    return ifft2(fft2(f) * np.exp(1j * _transfer_phase(f.shape[0], params)))
