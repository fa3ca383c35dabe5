"""Perversity sequences p_2..p_n and the four standard perversities."""

import logging
from dataclasses import dataclass

from config import STANDARD_PERVERSITIES
from errors import GrowthConditionError, PerversityDimensionError, UnknownPerversityError

logger = logging.getLogger('perversity')

_COMPLEMENTS = {
    "zero": "top",
    "top": "zero",
    "lower-middle": "upper-middle",
    "upper-middle": "lower-middle",
}


@dataclass(frozen=True)
class Perversity:
    """Values p_2..p_n for ambient dimension n; p_0 = p_1 = 0 implicitly"""
    n: int
    values: tuple
    name: str = "custom"

    def __call__(self, k):
        if k < 2:
            return 0
        if k > self.n:
            raise PerversityDimensionError(f"p_{k} is undefined for a perversity of dimension {self.n}")
        return self.values[k - 2]

    @property
    def spelling(self):
        """CLI spelling that parses back to this perversity"""
        if self.name in STANDARD_PERVERSITIES:
            return self.name
        return "custom:" + ",".join(str(v) for v in self.values)

    def restrict(self, m):
        """The same function on codimensions 2..m, for a space of dimension m <= n"""
        if m > self.n:
            raise PerversityDimensionError(f"cannot restrict a dimension-{self.n} perversity to {m}")
        return Perversity(m, self.values[:max(m - 1, 0)], self.name)

    def extend(self, m):
        """Extend to dimension m >= n, keeping standard perversities standard"""
        if m < self.n:
            return self.restrict(m)
        if self.name in STANDARD_PERVERSITIES:
            return standard(self.name, m)
        last = self.values[-1] if self.values else 0
        return Perversity(m, self.values + (last,) * (max(m - 1, 0) - len(self.values)), self.name)


def make_perversity(values, n, name="custom"):
    """Validate the Goresky-MacPherson growth conditions and build a Perversity"""
    values = tuple(int(v) for v in values)
    expected = max(n - 1, 0)
    if len(values) != expected:
        raise PerversityDimensionError(
            f"a perversity for n={n} needs {expected} values p_2..p_{n}, got {len(values)}")
    if values and values[0] != 0:
        raise GrowthConditionError(2, f"p_2 must be 0, got {values[0]}")
    for offset in range(1, len(values)):
        k = offset + 2
        step = values[offset] - values[offset - 1]
        if step not in (0, 1):
            raise GrowthConditionError(
                k, f"growth condition fails at p_{k}: p_{k - 1}={values[offset - 1]}, p_{k}={values[offset]}")
    return Perversity(n, values, name)


def standard(name, n):
    """One of zero, lower-middle, upper-middle, top"""
    formulas = {
        "zero": lambda k: 0,
        "top": lambda k: k - 2,
        "lower-middle": lambda k: (k - 2) // 2,
        "upper-middle": lambda k: (k - 1) // 2,
    }
    if name not in formulas:
        raise UnknownPerversityError(f"unknown perversity {name!r}; expected one of {', '.join(STANDARD_PERVERSITIES)}")
    return make_perversity([formulas[name](k) for k in range(2, n + 1)], n, name)


def complementary(p):
    """q_k = (k - 2) - p_k"""
    values = tuple((k - 2) - p(k) for k in range(2, p.n + 1))
    return make_perversity(values, p.n, _COMPLEMENTS.get(p.name, "custom"))


def parse_perversity(text, n):
    """Parse `zero | lower-middle | upper-middle | top | custom:<p_2,...,p_n>`"""
    text = text.strip()
    if text.startswith("custom:"):
        body = text[len("custom:"):].strip()
        try:
            values = [int(part) for part in body.split(",")] if body else []
        except ValueError:
            raise UnknownPerversityError(f"custom perversity {text!r} has a non-integer entry")
        return make_perversity(values, n)
    return standard(text, n)
