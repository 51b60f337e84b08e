"""Group spec mini-language.

    spec   := family | "prod(" spec "," spec ")" | "diag(" family ")" | "gens:" path
    family := "C" int | "D" int | "2T" | "2O" | "2I"

Whitespace is ignored.  ``D n`` is the binary dihedral group of order 4n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from . import groups

UNIT_REJECT = 1e-6


class SpecError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


@dataclass(frozen=True)
class Family:
    name: str
    n: int | None = None

    def __str__(self):
        return self.name if self.n is None else f"{self.name}{self.n}"


@dataclass(frozen=True)
class Prod:
    left: object
    right: object

    def __str__(self):
        return f"prod({self.left},{self.right})"


@dataclass(frozen=True)
class Diag:
    family: Family

    def __str__(self):
        return f"diag({self.family})"


@dataclass(frozen=True)
class Gens:
    path: str

    def __str__(self):
        return f"gens:{self.path}"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, n: int = 1) -> str:
        self.skip()
        return self.text[self.pos : self.pos + n]

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise SpecError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecError("expected an integer", start)
        return int(self.text[start : self.pos])

    def spec(self):
        self.skip()
        start = self.pos
        rest = self.text[self.pos :]
        if rest.startswith("prod"):
            self.pos += 4
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            if isinstance(left, (Prod, Diag)) or isinstance(right, (Prod, Diag)):
                raise SpecError("prod arguments must be SU(2) groups", start)
            return Prod(left, right)
        if rest.startswith("diag"):
            self.pos += 4
            self.expect("(")
            if self.peek(4) in ("prod", "diag") or self.peek(5) == "gens:":
                raise SpecError("diag takes a family", self.pos)
            fam = self.family()
            self.expect(")")
            return Diag(fam)
        if rest.startswith("gens:"):
            self.pos += 5
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ",)":
                self.pos += 1
            path = self.text[start : self.pos].strip()
            if not path:
                raise SpecError("empty generator path", start)
            return Gens(path)
        return self.family()

    def family(self) -> Family:
        self.skip()
        head = self.peek(2)
        if head in ("2T", "2O", "2I"):
            self.pos += 2
            return Family(head)
        head = self.peek(1)
        if head in ("C", "D"):
            start = self.pos
            self.pos += 1
            n = self.integer()
            if n < 1:
                raise SpecError("family parameter must be positive", start)
            return Family(head, n)
        raise SpecError("expected a group family", self.pos)


def parse_spec(text: str):
    """Parse a group spec into Family / Prod / Diag / Gens nodes."""
    p = _Parser(text)
    node = p.spec()
    p.skip()
    if p.pos != len(text):
        raise SpecError("trailing characters", p.pos)
    return node


def resolve_gens_path(path: str) -> Path:
    """A gens path relative to the working directory, else to the bundled data directory."""
    p = Path(path)
    if p.exists() or p.is_absolute():
        return p
    bundled = resources.files("quatmckay") / "data" / path
    return Path(str(bundled)) if bundled.is_file() else p


def load_gens(path) -> np.ndarray:
    """Read ``{"pairs": [[8 floats], ...]}``; rows are renormalized after a unit-norm check."""
    with open(resolve_gens_path(str(path)), encoding="utf-8") as fh:
        data = json.load(fh)
    pairs = np.asarray(data["pairs"], dtype=float).reshape(-1, 8)
    for half in (pairs[:, :4], pairs[:, 4:]):
        dev = np.abs(np.sum(half * half, axis=1) - 1.0)
        if np.any(dev > UNIT_REJECT):
            raise groups.GroupError(f"generator norm deviates from 1 by {dev.max():.3g}")
    return pairs


def build_family(fam: Family) -> groups.FiniteSubgroup:
    if fam.name == "C":
        return groups.cyclic(fam.n)
    if fam.name == "D":
        return groups.binary_dihedral(fam.n)
    return {"2T": groups.binary_tetrahedral, "2O": groups.binary_octahedral, "2I": groups.binary_icosahedral}[fam.name]()


def build_group(spec) -> groups.FiniteSubgroup:
    """Construct the group named by a spec string or parsed node."""
    node = parse_spec(spec) if isinstance(spec, str) else spec
    if isinstance(node, Family):
        g = build_family(node)
    elif isinstance(node, Prod):
        g = groups.product(build_group(node.left), build_group(node.right))
    elif isinstance(node, Diag):
        g = groups.diagonal(build_family(node.family))
    elif isinstance(node, Gens):
        g = groups.from_generators(load_gens(node.path))
    else:
        raise TypeError(f"not a group spec: {node!r}")
    g.name = str(node)
    return g
