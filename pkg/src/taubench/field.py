"""Exact coefficient fields: the prime fields F2..F11 and the rationals."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7, 11)


class Field:
    """A prime field F_p (p in SUPPORTED_PRIMES) or the rationals (p == 0).

    Matrices over F_p are int64 numpy arrays with entries in [0, p);
    matrices over Q are object arrays of Fraction.  Field objects are
    interned, so identity comparison is fine.
    """

    _cache: dict[int, "Field"] = {}

    def __new__(cls, p: int):
        if p not in cls._cache:
            if p != 0 and p not in SUPPORTED_PRIMES:
                raise ValueError(f"unsupported field characteristic {p}")
            obj = super().__new__(cls)
            obj.p = p
            if p:
                obj._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
            cls._cache[p] = obj
        return cls._cache[p]

    # -- scalars ------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p else "Q"

    def scalar(self, a):
        if self.p:
            return int(a) % self.p
        return Fraction(a)

    def inv_scalar(self, a):
        if self.p:
            a = int(a) % self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return self._inv[a]
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / Fraction(a)

    def nonzero_elements(self):
        if not self.p:
            raise ValueError("rationals are not enumerable")
        return list(range(1, self.p))

    def elements(self):
        if not self.p:
            raise ValueError("rationals are not enumerable")
        return list(range(self.p))

    # -- arrays -------------------------------------------------------

    @property
    def dtype(self):
        return np.int64 if self.p else object

    def zeros(self, shape):
        if self.p:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out[...] = Fraction(0)
        return out

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def array(self, data):
        if self.p:
            return np.asarray(data, dtype=np.int64) % self.p
        arr = np.array(
            [[Fraction(x) for x in row] for row in data]
            if np.ndim(data) == 2
            else [Fraction(x) for x in data],
            dtype=object,
        )
        return arr

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.p:
            return arr % self.p
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0 or b.shape[1] == 0 or a.shape[0] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return self.reduce(a @ b)

    def __repr__(self):
        return f"Field({self.name})"


def field_from_name(name: str) -> Field:
    name = name.strip()
    if name in ("Q", "QQ"):
        return Field(0)
    if name.startswith("F") and name[1:].isdigit():
        return Field(int(name[1:]))
    raise ValueError(f"unknown field spec {name!r} (expected F2|F3|F5|F7|F11|Q)")


GF2 = Field(2)
QQ = Field(0)
