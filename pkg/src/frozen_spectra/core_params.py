"""Problem configuration for the frozen-argument boundary value problem.

A problem instance is determined by two boundary flags alpha, beta in {0,1}
(value vs. derivative condition at the endpoints) and a rational frozen
argument a = j/k in lowest terms.  This module owns the validated config,
the sign constants c = (-1)^(beta+1), d = (-1)^(alpha+beta), and the exact
degenerate / non-degenerate case split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Kind(str, Enum):
    DEGENERATE = "Degenerate"
    NON_DEGENERATE = "NonDegenerate"


class Case(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"


@dataclass(frozen=True)
class ProblemConfig:
    alpha: int
    beta: int
    j: int
    k: int

    @property
    def a(self) -> Fraction:
        return Fraction(self.j, self.k)

    @property
    def is_normalized(self) -> bool:
        return 2 * self.j <= self.k

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "j": self.j, "k": self.k}

    @staticmethod
    def from_dict(d: dict) -> "ProblemConfig":
        return make_config(d["alpha"], d["beta"], d["j"], d["k"])


@dataclass(frozen=True)
class SignPair:
    c: int
    d: int


@dataclass(frozen=True)
class Classification:
    kind: Kind
    case_label: Case


def make_config(alpha: int, beta: int, j: int, k: int) -> ProblemConfig:
    """Validated config with j/k silently reduced to lowest terms."""
    if alpha not in (0, 1) or beta not in (0, 1):
        raise ValueError("alpha and beta must be 0 or 1")
    if not isinstance(j, int) or not isinstance(k, int):
        raise ValueError("j and k must be integers")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not 0 <= j <= k:
        raise ValueError("need 0 <= j <= k so that a = j/k lies in [0, 1]")
    g = math.gcd(j, k)
    return ProblemConfig(alpha, beta, j // g, k // g)


def normalize_to_half(config: ProblemConfig) -> tuple[ProblemConfig, bool]:
    """Reflect a > 1/2 onto a <= 1/2.

    The spectrum is invariant under q(x) -> q(1-x), a -> 1-a with the
    boundary flags swapped, so configs with 2j > k map to
    (beta, alpha, k - j, k).  Returns (config, reflected); when reflected
    is True the caller must mirror potentials x -> 1-x.
    """
    if 2 * config.j > config.k:
        return (
            ProblemConfig(config.beta, config.alpha, config.k - config.j, config.k),
            True,
        )
    return config, False


def sign_pair(config: ProblemConfig) -> SignPair:
    c = (-1) ** (config.beta + 1)
    d = (-1) ** (config.alpha + config.beta)
    return SignPair(c, d)


def classify(config: ProblemConfig) -> Classification:
    """Exact degenerate / non-degenerate case split.

    Degenerate (matrix singular, iso-spectral families exist):
      (I)   alpha = beta = 0
      (II)  alpha = 0, beta = 1, j even
      (III) alpha = 1, beta = 0, k + j even
      (IV)  alpha = beta = 1, k even
    Non-degenerate: the complementary cases (V)-(VII).  The parity rules
    are valid for every relevant j in {0, ..., k}, not only j <= k/2.
    """
    a, b, j, k = config.alpha, config.beta, config.j, config.k
    if a == 0 and b == 0:
        return Classification(Kind.DEGENERATE, Case.I)
    if a == 0 and b == 1:
        if j % 2 == 0:
            return Classification(Kind.DEGENERATE, Case.II)
        return Classification(Kind.NON_DEGENERATE, Case.V)
    if a == 1 and b == 0:
        if (k + j) % 2 == 0:
            return Classification(Kind.DEGENERATE, Case.III)
        return Classification(Kind.NON_DEGENERATE, Case.VI)
    if k % 2 == 0:
        return Classification(Kind.DEGENERATE, Case.IV)
    return Classification(Kind.NON_DEGENERATE, Case.VII)
