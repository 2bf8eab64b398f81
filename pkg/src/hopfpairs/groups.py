"""Finitely generated abelian groups Z^r x Z_n1 x ... and their characters."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import lcm

from .scalars import Field, Scalar, unity_order


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0 or any(n < 1 for n in self.torsion):
            raise ValueError("invalid abelian group presentation")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite group")
        out = 1
        for n in self.torsion:
            out *= n
        return out

    def exponent(self) -> int:
        return lcm(1, *self.torsion)

    def element(self, exps) -> "GroupElem":
        return GroupElem(self, tuple(exps))

    def generator(self, i: int) -> "GroupElem":
        return self.element(1 if k == i else 0 for k in range(self.ngens))

    def identity(self) -> "GroupElem":
        return self.element([0] * self.ngens)

    def elements(self) -> list["GroupElem"]:
        """All elements of a finite group in lexicographic exponent order."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        return [self.element(e) for e in iproduct(*(range(n) for n in self.torsion))]

    def to_json(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj: dict) -> "AbelianGroup":
        return cls(int(obj["free"]), tuple(int(n) for n in obj["torsion"]))


@dataclass(frozen=True)
class GroupElem:
    group: AbelianGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        if len(self.exps) != g.ngens:
            raise ValueError("exponent vector has the wrong length")
        r = g.free_rank
        red = tuple(e if i < r else e % g.torsion[i - r] for i, e in enumerate(self.exps))
        object.__setattr__(self, "exps", red)

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return GroupElem(self.group, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "GroupElem":
        return GroupElem(self.group, tuple(k * a for a in self.exps))

    def inverse(self) -> "GroupElem":
        return self ** -1

    def to_json(self) -> list[int]:
        return list(self.exps)


@dataclass
class Character:
    """A homomorphism to the multiplicative group, given on generators."""

    group: AbelianGroup
    values: list[Scalar] = field(default_factory=list)

    def __post_init__(self):
        if len(self.values) != self.group.ngens:
            raise ValueError("one value per generator is required")
        r = self.group.free_rank
        for i, v in enumerate(self.values):
            if v.is_zero():
                raise ValueError("character values must be nonzero")
            if i >= r:
                n = self.group.torsion[i - r]
                if not (v ** n).is_one():
                    raise ValueError(f"value on generator {i} is not an {n}-th root of unity")

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.group == other.group and self.values == other.values

    def to_json(self) -> dict:
        return {"values": [v.to_json() for v in self.values]}

    @classmethod
    def from_json(cls, group: AbelianGroup, obj: dict) -> "Character":
        return cls(group, [Scalar.from_json(v) for v in obj["values"]])


def char_eval(chi: Character, g: GroupElem) -> Scalar:
    if chi.group != g.group:
        raise ValueError("character and element belong to different groups")
    N = chi.values[0].N if chi.values else None
    out = Scalar.from_int(1, N) if N is not None else None
    if out is None:
        raise ValueError("character on the trivial group needs a conductor")
    for v, e in zip(chi.values, g.exps):
        if e:
            out = out * v ** e
    return out


def char_product(a: Character, b: Character) -> Character:
    if a.group != b.group:
        raise ValueError("characters of different groups")
    return Character(a.group, [x * y for x, y in zip(a.values, b.values)])


def char_power(a: Character, k: int) -> Character:
    return Character(a.group, [x ** k for x in a.values])


def trivial_character(group: AbelianGroup, N: int) -> Character:
    return Character(group, [Scalar.from_int(1, N)] * group.ngens)


def enumerate_characters(group: AbelianGroup, conductor: int) -> list[Character]:
    """All characters of a finite group with values in Q(zeta_N).

    Requires every torsion order to divide the number of roots of unity
    in the field.
    """
    if not group.is_finite:
        raise ValueError("character enumeration needs a finite group")
    L = unity_order(conductor)
    for n in group.torsion:
        if L % n:
            raise ValueError(f"conductor {conductor} too small for Z_{n}")
    F = Field(conductor)
    choices = [[F.root_of_unity(n, k) for k in range(n)] for n in group.torsion]
    return [Character(group, list(vals)) for vals in iproduct(*choices)]
