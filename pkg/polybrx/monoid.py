# coding: utf-8
"""
Finite monoids given by Cayley tables, their S-side predicates and the
homomorphism theta into the group of units.
"""
import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

GREEN_RELATIONS = ("L", "R", "H", "D", "J")

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


@dataclass(frozen=True)
class Violation:
    """ A failed law together with the elements witnessing the failure. """

    kind: str
    witness: Tuple[int, ...]
    message: str


class MonoidError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(violation.message)
        self.violation = violation


class ThetaError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(violation.message)
        self.violation = violation


class PreconditionError(ValueError):
    """ An operation was asked outside the class of monoids it is defined on. """


def check_index(value, what: str) -> int:
    """ Element indices are plain integers; floats and booleans are rejected. """
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError("{} must be an integer index, got {!r}".format(what, value))
    return int(value)



class FiniteMonoid:
    """ Monoid on the elements 0..n-1 with a product table. """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        identity: int,
        name: str = "S",
        names: Optional[List[str]] = None,
    ):
        """
        Create a monoid from its Cayley table. Only the shape of the table is
        checked here, the monoid laws are checked by `validate_monoid`.

        :param table: n x n table, table[x][y] is the index of xy
        :param identity: index of the identity element
        :param name: presentation name of the monoid
        :param names: optional element names
        """
        rows = [list(row) for row in table]
        n = len(rows)
        if n == 0:
            raise ValueError("Monoid table must not be empty")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(
                    "Ragged table: row {} has {} entries, expected {}".format(
                        i, len(row), n
                    )
                )
            for j, entry in enumerate(row):
                check_index(entry, "Table entry at ({}, {})".format(i, j))
        identity = check_index(identity, "Identity")
        self.table = np.array(rows, dtype=np.int64)
        if self.table.min() < 0 or self.table.max() >= n:
            bad = np.argwhere((self.table < 0) | (self.table >= n))[0]
            raise ValueError(
                "Table entry at ({}, {}) is out of range".format(bad[0], bad[1])
            )
        if not 0 <= identity < n:
            raise ValueError("Identity index {} is out of range".format(identity))
        if names is not None and len(names) != n:
            raise ValueError("Expected {} element names, got {}".format(n, len(names)))
        self.table.setflags(write=False)
        self.size = n
        self.identity = identity
        self.name = name
        self.names = list(names) if names is not None else None

        t = self.table
        diag = t[np.arange(n), np.arange(n)]
        self.idempotents = frozenset(int(e) for e in np.flatnonzero(diag == np.arange(n)))
        self.units = frozenset(
            s for s in range(n) if np.any((t[s, :] == identity) & (t[:, s] == identity))
        )
        self.center = frozenset(s for s in range(n) if np.array_equal(t[s, :], t[:, s]))

    def __repr__(self) -> str:
        return "FiniteMonoid({}, size={})".format(self.name, self.size)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def name_of(self, x: int) -> str:
        if self.names is None:
            return "s{}".format(x)
        return self.names[x]

    def index_of(self, name: str) -> int:
        if self.names is not None and name in self.names:
            return self.names.index(name)
        raise ValueError("Unknown element name '{}' in {}".format(name, self.name))

    @cached_property
    def right_ideals(self) -> List[FrozenSet[int]]:
        return [frozenset(self.table[x, :].tolist()) for x in range(self.size)]

    @cached_property
    def left_ideals(self) -> List[FrozenSet[int]]:
        return [frozenset(self.table[:, x].tolist()) for x in range(self.size)]

    @cached_property
    def two_sided_ideals(self) -> List[FrozenSet[int]]:
        t = self.table
        return [frozenset(t[t[:, x], :].ravel().tolist()) for x in range(self.size)]

    @cached_property
    def relations(self) -> Dict[str, np.ndarray]:
        """ Boolean n x n matrices of the Green's relations. """

        def same(ideals):
            return np.array(
                [[ideals[x] == ideals[y] for y in range(self.size)] for x in range(self.size)]
            )

        rel_l = same(self.left_ideals)
        rel_r = same(self.right_ideals)
        return {
            "L": rel_l,
            "R": rel_r,
            "H": rel_l & rel_r,
            "D": compose_relations(rel_l, rel_r),
            "J": same(self.two_sided_ideals),
        }


def compose_relations(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """ x (first o second) y iff there is z with x first z and z second y. """
    return (first.astype(np.int64) @ second.astype(np.int64)) > 0


def validate_monoid(m: FiniteMonoid) -> Optional[Violation]:
    """
    Check associativity on all triples, then the identity law.

    :param m: monoid to check
    :return: None if the laws hold, else the first violation found
    """
    t = m.table
    left = t[t, :]  # (xy)z at [x, y, z]
    right = t[:, t]  # x(yz) at [x, y, z]
    bad = np.argwhere(left != right)
    if len(bad) > 0:
        x, y, z = (int(i) for i in bad[0])
        return Violation(
            "associativity",
            (x, y, z),
            "Associativity fails at ({}, {}, {}): (xy)z = {} but x(yz) = {}".format(
                x, y, z, int(left[x, y, z]), int(right[x, y, z])
            ),
        )
    e = m.identity
    ar = np.arange(m.size)
    bad = np.flatnonzero((t[e, :] != ar) | (t[:, e] != ar))
    if len(bad) > 0:
        x = int(bad[0])
        return Violation(
            "identity",
            (e, x),
            "Identity law fails for identity {} at element {}".format(e, x),
        )
    return None


def check_monoid(m: FiniteMonoid) -> FiniteMonoid:
    """ Return m, or raise MonoidError carrying its first violation. """
    violation = validate_monoid(m)
    if violation is not None:
        raise MonoidError(violation)
    return m


def idempotents(m: FiniteMonoid) -> FrozenSet[int]:
    return m.idempotents


def unit_group(m: FiniteMonoid) -> FrozenSet[int]:
    return m.units


def center(m: FiniteMonoid) -> FrozenSet[int]:
    return m.center


def green_S(m: FiniteMonoid, rel: str, x: int, y: int) -> bool:
    """
    Green's relation `rel` between x and y, computed from principal ideals.
    D is the composition L o R.
    """
    if rel not in GREEN_RELATIONS:
        raise ValueError("Unknown Green's relation '{}'".format(rel))
    return bool(m.relations[rel][x, y])


def green_classes(m: FiniteMonoid, rel: str) -> List[FrozenSet[int]]:
    """ Partition of the monoid into classes of `rel`, ordered by least element. """
    classes = []
    seen = set()
    matrix = m.relations[rel]
    for x in range(m.size):
        if x in seen:
            continue
        cls = frozenset(int(y) for y in np.flatnonzero(matrix[x]))
        seen |= cls
        classes.append(cls)
    return classes


def check_green_consistency(m: FiniteMonoid) -> Optional[Violation]:
    """
    L o R must equal R o L, and D must equal J for a finite monoid.
    """
    rel = m.relations
    lr = compose_relations(rel["L"], rel["R"])
    rl = compose_relations(rel["R"], rel["L"])
    bad = np.argwhere(lr != rl)
    if len(bad) > 0:
        x, y = (int(i) for i in bad[0])
        return Violation("green", (x, y), "L o R differs from R o L at ({}, {})".format(x, y))
    bad = np.argwhere(rel["D"] != rel["J"])
    if len(bad) > 0:
        x, y = (int(i) for i in bad[0])
        return Violation("green", (x, y), "D differs from J at ({}, {})".format(x, y))
    return None


def inverses_of(m: FiniteMonoid, x: int) -> FrozenSet[int]:
    t = m.table
    ys = np.arange(m.size)
    first = t[t[x, ys], x] == x
    second = t[t[ys, x], ys] == ys
    return frozenset(int(y) for y in ys[first & second])


def is_regular(m: FiniteMonoid) -> bool:
    return all(inverses_of(m, x) for x in range(m.size))


def is_inverse_monoid(m: FiniteMonoid) -> bool:
    return all(len(inverses_of(m, x)) == 1 for x in range(m.size))


def noncommuting_idempotents(m: FiniteMonoid) -> Optional[Tuple[int, int]]:
    """ First pair of idempotents e, f with ef != fe, or None. """
    idem = sorted(m.idempotents)
    for e in idem:
        for f in idem:
            if m.table[e, f] != m.table[f, e]:
                return e, f
    return None


def idempotents_commute(m: FiniteMonoid) -> bool:
    return noncommuting_idempotents(m) is None


def e_unitary_violation(m: FiniteMonoid) -> Optional[Tuple[int, int]]:
    """
    First pair (e, s) with e idempotent, es idempotent and s not idempotent.
    """
    if not is_inverse_monoid(m):
        raise PreconditionError("E-unitarity is defined for inverse monoids, {} is not one".format(m.name))
    for e in sorted(m.idempotents):
        for s in range(m.size):
            if s not in m.idempotents and int(m.table[e, s]) in m.idempotents:
                return e, s
    return None


def is_E_unitary(m: FiniteMonoid) -> bool:
    return e_unitary_violation(m) is None


def nat_leq(m: FiniteMonoid, x: int, y: int) -> bool:
    """
    Natural partial order: ef = fe = e on idempotents, x = ey for some
    idempotent e on an inverse monoid.
    """
    t = m.table
    if x in m.idempotents and y in m.idempotents:
        return bool(t[x, y] == x and t[y, x] == x)
    if not is_inverse_monoid(m):
        raise PreconditionError(
            "Natural order on non-idempotents needs an inverse monoid, {} is not one".format(m.name)
        )
    return any(t[e, y] == x for e in m.idempotents)


def is_combinatorial(m: FiniteMonoid) -> bool:
    return all(len(cls) == 1 for cls in green_classes(m, "H"))


def is_bisimple(m: FiniteMonoid) -> bool:
    return len(green_classes(m, "D")) == 1


def right_solutions(m: FiniteMonoid, s: int, t: int) -> FrozenSet[int]:
    """ {x : sx = t} """
    return frozenset(int(x) for x in np.flatnonzero(m.table[s, :] == t))


def left_solutions(m: FiniteMonoid, s: int, t: int) -> FrozenSet[int]:
    """ {x : xs = t} """
    return frozenset(int(x) for x in np.flatnonzero(m.table[:, s] == t))


@dataclass(frozen=True)
class Theta:
    """ Endomap of a monoid, meant to be a homomorphism into its group of units. """

    images: Tuple[int, ...]

    def __post_init__(self):
        for x, image in enumerate(self.images):
            check_index(image, "Theta image of {}".format(x))

    def __call__(self, x: int) -> int:
        return self.images[x]


def validate_theta(m: FiniteMonoid, theta: Theta) -> Optional[Violation]:
    """
    Theta must map into the group of units and be multiplicative.

    :return: None if theta is admissible, else the first violation
    """
    if len(theta.images) != m.size:
        raise ValueError(
            "Theta has {} images, monoid {} has {} elements".format(
                len(theta.images), m.name, m.size
            )
        )
    images = np.array(theta.images, dtype=np.int64)
    if images.min() < 0 or images.max() >= m.size:
        raise ValueError("Theta image out of range for monoid {}".format(m.name))
    for x in range(m.size):
        if int(images[x]) not in m.units:
            return Violation(
                "unit_image",
                (x,),
                "Theta maps {} to {}, which is not a unit of {}".format(
                    x, int(images[x]), m.name
                ),
            )
    t = m.table
    bad = np.argwhere(images[t] != t[images[:, None], images[None, :]])
    if len(bad) > 0:
        x, y = (int(i) for i in bad[0])
        return Violation(
            "homomorphism",
            (x, y),
            "Theta is not multiplicative at ({}, {})".format(x, y),
        )
    assert images[m.identity] == m.identity
    return None


def check_theta(m: FiniteMonoid, theta: Theta) -> Theta:
    violation = validate_theta(m, theta)
    if violation is not None:
        raise ThetaError(violation)
    return theta


def theta_pow(theta: Theta, n: int, x: int) -> int:
    """ theta^n(x), theta^0 being the identity map. """
    for _ in range(n):
        x = theta.images[x]
    return x


def theta_fiber(theta: Theta, y: int) -> FrozenSet[int]:
    return frozenset(x for x, image in enumerate(theta.images) if image == y)


def theta_pow_fiber(theta: Theta, n: int, y: int) -> FrozenSet[int]:
    """ {x : theta^n(x) = y} """
    return frozenset(x for x in range(len(theta.images)) if theta_pow(theta, n, x) == y)


def theta_identity(m: FiniteMonoid) -> Theta:
    return Theta(tuple(range(m.size)))


def theta_one(m: FiniteMonoid) -> Theta:
    return Theta(tuple([m.identity] * m.size))


def trivial() -> FiniteMonoid:
    return FiniteMonoid([[0]], 0, name="trivial", names=["1"])


def cyclic(n: int) -> FiniteMonoid:
    names = ["e", "g"] + ["g{}".format(i) for i in range(2, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteMonoid(table, 0, name="C{}".format(n), names=names[:n])


def chain_semilattice(n: int) -> FiniteMonoid:
    """ Chain 1 > f1 > ... > f_{n-1}; the product is the meet. """
    names = ["1"] + (["f"] if n == 2 else ["f{}".format(i) for i in range(1, n)])
    table = [[max(i, j) for j in range(n)] for i in range(n)]
    return FiniteMonoid(table, 0, name="chain{}".format(n), names=names)


def leftzero(n: int) -> FiniteMonoid:
    """ Left zero semigroup on n elements with an identity adjoined at index 0. """
    letters = ["x", "y", "z"] if n <= 3 else ["x{}".format(i) for i in range(1, n + 1)]
    table = [[j if i == 0 else i for j in range(n + 1)] for i in range(n + 1)]
    return FiniteMonoid(table, 0, name="lz{}".format(n), names=["1"] + letters[:n])


def symmetric_inverse_2() -> FiniteMonoid:
    monoid, _ = load_monoid_file(os.path.join(FIXTURE_DIR, "I2.json"))
    return monoid


BUILTIN_MONOIDS = {
    "trivial": trivial,
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "chain2": lambda: chain_semilattice(2),
    "lz2": lambda: leftzero(2),
    "I2": symmetric_inverse_2,
}


def load_monoid_file(path: str) -> Tuple[FiniteMonoid, Optional[Theta]]:
    """
    Load and validate a monoid spec file.

    File format (JSON, 0-based indices):
        {"name": str, "size": n, "identity": int, "table": [[int]],
         "theta": [int] (optional), "names": [str] (optional)}

    :param path: path to the JSON file
    :return: validated monoid and theta (None when the file has none)
    """
    with open(path, "r", encoding="utf-8") as spec_file:
        spec = json.load(spec_file)
    for key in ("size", "identity", "table"):
        if key not in spec:
            raise ValueError("Monoid file {} lacks '{}'".format(path, key))
    monoid = FiniteMonoid(
        spec["table"],
        spec["identity"],
        name=spec.get("name", os.path.splitext(os.path.basename(path))[0]),
        names=spec.get("names"),
    )
    if monoid.size != spec["size"]:
        raise ValueError(
            "Monoid file {} declares size {} but has a {}-row table".format(
                path, spec["size"], monoid.size
            )
        )
    check_monoid(monoid)
    theta = None
    if spec.get("theta") is not None:
        theta = check_theta(monoid, Theta(tuple(spec["theta"])))
    return monoid, theta


def monoid_to_dict(m: FiniteMonoid, theta: Optional[Theta] = None) -> dict:
    spec = {
        "name": m.name,
        "size": m.size,
        "identity": m.identity,
        "table": m.table.tolist(),
    }
    if theta is not None:
        spec["theta"] = list(theta.images)
    if m.names is not None:
        spec["names"] = list(m.names)
    return spec
