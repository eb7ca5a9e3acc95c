"""Plain-text expansion cache.

Layout::

    # siegel6-cache 1
    name phi4
    weight 0 4
    coset even
    tmax 8
    floor 0
    sha256 <hex digest of the body>
    <nu1> <nu2> <rho> <c_0> ... <c_j>

Body lines are sorted canonically and hold exact ``p/q`` tokens.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .classical import ScalarExpansion
from .index_lattice import Index, canonical_key
from .rcpoly import HomogPoly
from .vvforms import VectorExpansion

MAGIC = "# siegel6-cache 1"


class CacheError(ValueError):
    pass


def _tok(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def dumps(F: ScalarExpansion | VectorExpansion) -> str:
    if isinstance(F, ScalarExpansion):
        j, k = 0, F.weight
        items = {n: (c,) for n, c in F.coeffs.items()}
    else:
        j, k = F.j, F.k
        items = {n: v.coeffs for n, v in F.coeffs.items()}
    body = "".join(
        f"{n.nu1} {n.nu2} {n.rho} " + " ".join(_tok(Fraction(c)) for c in items[n]) + "\n"
        for n in sorted(items, key=canonical_key)
        if any(items[n])
    )
    digest = hashlib.sha256(body.encode()).hexdigest()
    head = [
        MAGIC,
        f"name {F.name or '-'}",
        f"weight {j} {k}",
        f"coset {F.coset}",
        f"tmax {F.tmax}",
        f"floor {F.min_doubled_trace}",
        f"sha256 {digest}",
    ]
    return "\n".join(head) + "\n" + body


def loads(text: str) -> ScalarExpansion | VectorExpansion:
    lines = text.split("\n")
    if len(lines) < 7 or lines[0] != MAGIC:
        raise CacheError("not a siegel6 cache file")
    head = {}
    for line in lines[1:7]:
        key, _, val = line.partition(" ")
        head[key] = val
    try:
        j, k = (int(x) for x in head["weight"].split())
        coset, tmax, floor = head["coset"], int(head["tmax"]), int(head["floor"])
        digest = head["sha256"]
    except (KeyError, ValueError) as exc:
        raise CacheError(f"malformed header: {exc}") from None
    body = "\n".join(lines[7:])
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        raise CacheError("checksum mismatch")
    name = "" if head.get("name", "-") == "-" else head["name"]
    coeffs = {}
    for line in lines[7:]:
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3 + j + 1:
            raise CacheError(f"bad payload length in line {line!r}")
        n = Index(*(int(x) for x in parts[:3]))
        vals = [Fraction(x) for x in parts[3:]]
        coeffs[n] = vals[0] if j == 0 else HomogPoly(vals)
    if j == 0:
        return ScalarExpansion(k, coset, tmax, coeffs, floor, name)
    return VectorExpansion(j, k, coset, tmax, coeffs, floor, name)


def store(F, path: str | os.PathLike) -> Path:
    """Write atomically (temp file in the same directory, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(dumps(F))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(path: str | os.PathLike):
    return loads(Path(path).read_text())
