"""
Exact base parameter q, carried through its square root s = sqrt(q).

Every power q^{k/2} that the Stieltjes-Wigert formulas need is an integer
power of s, so the whole exact pipeline stays in `Fraction`.
"""
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Union

RationalLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class QContext:
    """
    Holds s = sqrt(q) exactly, 0 < s < 1.

    Integer powers of s are memoized; the memo is guarded by a lock so a
    context can be shared between concurrent checks.
    """

    s: Fraction
    _powers: Dict[int, Fraction] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        s = Fraction(self.s)
        if not 0 < s < 1:
            raise ValueError(f"sqrt-q must lie in (0,1), got {s}")
        object.__setattr__(self, "s", s)

    @classmethod
    def from_sqrt_q(cls, value: RationalLike) -> "QContext":
        """
        Build a context from s given as "p/r", an int or a Fraction.

        Args:
            value: exact square root of q

        Returns:
            QContext instance
        """
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"sqrt-q must be an exact rational p/r, got {value!r}") from exc
        return cls(Fraction(value))

    @cached_property
    def q(self) -> Fraction:
        return self.s * self.s

    def power(self, k: int) -> Fraction:
        """Return s^k exactly; negative k allowed."""
        with self._lock:
            cached = self._powers.get(k)
            if cached is None:
                cached = self.s ** k
                self._powers[k] = cached
            return cached

    def qpow(self, k: int) -> Fraction:
        """Return q^k = s^{2k}."""
        return self.power(2 * k)

    def precompute(self, bound: int) -> "QContext":
        """Fill the memo for |k| <= bound before sharing the context."""
        for k in range(-bound, bound + 1):
            self.power(k)
        return self

    def __str__(self) -> str:
        return f"q={self.q} (sqrt-q={self.s})"
