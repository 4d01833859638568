"""Recursion-coefficient chains.

A chain is the pair of sequences {a_n, b_n} of the symmetric three-term
recursion ``z f_n = a_n f_n + b_{n-1} f_{n-1} + b_n f_{n+1}``.  Sequences
are produced on demand by a deterministic provider, so a chain has no
fixed length unless it was built from finite arrays.
"""
from dataclasses import dataclass, field
import math
from typing import Callable, Optional, Tuple

import numpy as np

from . import orthopoly
from .errors import StructuralError


@dataclass(frozen=True)
class RecursionCoeffs:
    provider: Callable[[int], Tuple[float, float]]
    f0: float = 1.0
    name: str = "custom"
    length: Optional[int] = None
    params: dict = field(default_factory=dict, compare=False)

    def coeff(self, n):
        if n < 0:
            raise IndexError("recursion index must be non-negative")
        if self.length is not None and n >= self.length:
            raise StructuralError(f"chain '{self.name}' only has {self.length} levels", index=n)
        a, b = self.provider(n)
        return float(a), float(b)

    def arrays(self, N):
        """First N diagonal and off-diagonal coefficients."""
        a = np.empty(N)
        b = np.empty(N)
        for n in range(N):
            a[n], b[n] = self.coeff(n)
        return a, b

    @property
    def mass(self):
        """Total mass of the orthogonality measure implied by ``f0``."""
        return 1.0 / self.f0 ** 2

    @classmethod
    def constant(cls, a, b, f0=1.0):
        return cls(lambda n: (a, b), f0=f0, name="constant", params={"a": a, "b": b})

    @classmethod
    def from_arrays(cls, a, b, f0=1.0, name="custom"):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if len(b) < len(a):
            b = np.concatenate([b, np.zeros(len(a) - len(b))])
        return cls(lambda n: (a[n], b[n]), f0=f0, name=name, length=len(a))

    @classmethod
    def jacobi(cls, mu, nu):
        """Orthonormal Jacobi chain with mass equal to the weight integral."""
        p = orthopoly.JacobiParams(mu, nu)

        def provider(n):
            a, _, d = orthopoly.jacobi_recurrence(n, mu, nu)
            return a, d * math.exp(0.5 * (orthopoly.jacobi_log_norm(n + 1, p)
                                          - orthopoly.jacobi_log_norm(n, p)))

        return cls(provider, f0=math.exp(-0.5 * orthopoly.jacobi_log_norm(0, p)),
                   name="jacobi", params={"mu": mu, "nu": nu})

    @classmethod
    def laguerre(cls, nu):
        orthopoly.LaguerreParams(nu)
        return cls(lambda n: (2 * n + nu + 1, math.sqrt((n + 1) * (n + nu + 1))),
                   f0=math.exp(-0.5 * orthopoly.laguerre_log_norm(0, orthopoly.LaguerreParams(nu))),
                   name="laguerre", params={"nu": nu})

    def perturbed(self, level, delta_a=0.0, delta_b=0.0):
        """Copy with one level shifted; used as a negative control."""
        base = self.provider

        def provider(n):
            a, b = base(n)
            if n == level:
                return a + delta_a, b + delta_b
            return a, b

        return RecursionCoeffs(provider, f0=self.f0, name=self.name + "+perturbed",
                               length=self.length, params=dict(self.params))
