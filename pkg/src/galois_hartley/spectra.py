"""Valid Hartley spectra and their cyclotomic structure.

A spectrum V comes from a GF(q)-valued signal iff

    V_k^q = V_{(N - qk) mod N}    for every k.

The index map k -> -qk (mod N) splits {0, ..., N-1} into orbits; a valid
spectrum is fixed by one value per orbit, and every other entry of the
orbit follows by repeated Frobenius.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InconsistentAssignment, NotCoprime
from .ffht import Spectrum, TransformPlan, _as_values

__all__ = [
    "CyclotomicPartition",
    "cyclotomic_classes",
    "free_components",
    "is_valid_spectrum",
    "expand_spectrum",
]


@dataclass(frozen=True)
class CyclotomicPartition:
    N: int
    q: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def step(self, k: int) -> int:
        return (-self.q * k) % self.N

    def class_of(self, k: int) -> tuple[int, ...]:
        for c in self.classes:
            if k in c:
                return c
        raise ValueError(f"{k} is not a residue mod {self.N}")

    def __str__(self) -> str:
        return " ".join(f"C{c[0]}=({','.join(map(str, c))})" for c in self.classes)

    def to_json(self) -> dict:
        return {"N": self.N, "q": self.q, "classes": [list(c) for c in self.classes]}


@lru_cache(maxsize=256)
def cyclotomic_classes(N: int, q: int) -> CyclotomicPartition:
    """Orbits of k -> -qk (mod N), each listed from its smallest member.

    >>> str(cyclotomic_classes(11, 3))
    'C0=(0) C1=(1,8,9,6,4,10,3,2,5,7)'
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if gcd(N, q) != 1:
        raise NotCoprime(f"gcd({N}, {q}) = {gcd(N, q)}")
    seen = [False] * N
    classes = []
    for start in range(N):
        if seen[start]:
            continue
        orbit = []
        k = start
        while not seen[k]:
            seen[k] = True
            orbit.append(k)
            k = (-q * k) % N
        classes.append(tuple(orbit))
    return CyclotomicPartition(N, q, tuple(classes))


def free_components(partition: CyclotomicPartition) -> list[int]:
    """Indices that fully determine a valid spectrum (one per orbit)."""
    return list(partition.representatives)


def is_valid_spectrum(plan: TransformPlan, V) -> bool:
    """True iff V is the spectrum of a signal with values in GF(q)."""
    vals = _as_values(plan, V)
    n, q = plan.N, plan.q
    return all(vals[k].frobenius(q) == vals[(-q * k) % n] for k in range(n))


def expand_spectrum(plan: TransformPlan, assignments: Mapping[int, object]) -> Spectrum:
    """Fill in a valid spectrum from one value per orbit representative.

    Raises :class:`InconsistentAssignment` when a key is not a representative,
    a representative is missing, or a value is not fixed by Frobenius applied
    once per orbit element (so the orbit would not close).
    """
    part = cyclotomic_classes(plan.N, plan.q)
    reps = set(part.representatives)
    extra = sorted(set(assignments) - reps)
    if extra:
        raise InconsistentAssignment(f"indices {extra} are not class representatives {sorted(reps)}")
    missing = sorted(reps - set(assignments))
    if missing:
        raise InconsistentAssignment(f"no value given for representatives {missing}")
    out = [None] * plan.N
    for orbit in part.classes:
        value = plan.element(assignments[orbit[0]])
        for k in orbit:
            out[k] = value
            value = value.frobenius(plan.q)
        if value != out[orbit[0]]:
            raise InconsistentAssignment(
                f"V_{orbit[0]} = {out[orbit[0]]} does not return to itself after "
                f"{len(orbit)} Frobenius steps (got {value})"
            )
    return Spectrum(plan, out)
