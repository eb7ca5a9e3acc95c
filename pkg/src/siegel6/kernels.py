"""Backend selection for the grouped partition convolution.

Every bilinear Fourier-level operation in the package (products of scalar
forms, Rankin-Cohen operators, brackets, wedge products) is reduced to
:func:`convolve`.  The compiled backend works modulo several primes below
``2**31`` and reconstructs the exact integers by CRT; the pure-Python backend
works with Python integers directly.  Set ``SIEGEL6_KERNEL=python`` to force
the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Mapping, Sequence

from ._kernel_py import conv_exact

try:  # pragma: no cover - depends on the build
    from . import _ckernel
except ImportError:  # pragma: no cover
    _ckernel = None

Triple = tuple[int, int, int]
Group = tuple[int, int, Sequence[tuple[int, int]]]


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _ckernel is not None else [])


def default_backend() -> str:
    forced = os.environ.get("SIEGEL6_KERNEL", "").strip().lower()
    if forced in ("python", "py"):
        return "python"
    if forced in ("compiled", "c", "cython"):
        if _ckernel is None:
            raise ImportError("compiled kernel requested but not built")
        return "compiled"
    return "compiled" if _ckernel is not None else "python"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SIEGEL6_THREADS", "1")))
    except ValueError:
        return 1


def convolve(
    left: Mapping[Triple, Sequence[int]],
    right: Mapping[Triple, Sequence[int]],
    groups: Sequence[Group],
    nout: int,
    targets: Sequence[Triple],
    *,
    backend: str | None = None,
    threads: int | None = None,
) -> dict[Triple, list[int]]:
    """Exact grouped convolution; see :func:`conv_exact` for the semantics."""
    targets = [tuple(t) for t in targets]
    left = {k: v for k, v in left.items() if any(v)}
    right = {k: v for k, v in right.items() if any(v)}
    groups = [(a, b, list(outs)) for a, b, outs in groups if outs]
    if not targets:
        return {}
    if not left or not right or not groups:
        return {t: [0] * nout for t in targets}
    backend = backend or default_backend()
    if backend == "python":
        return conv_exact(left, right, groups, nout, targets)
    if backend != "compiled" or _ckernel is None:
        raise ValueError(f"unknown or unavailable backend {backend!r}")
    return _conv_compiled(left, right, groups, nout, targets, threads or default_threads())


# --- compiled path ------------------------------------------------------------


@lru_cache(maxsize=None)
def _primes(count: int) -> tuple[int, ...]:
    from sympy import prevprime

    out = []
    p = 2**31
    for _ in range(count):
        p = prevprime(p)
        out.append(p)
    return tuple(out)


def _bound_bits(left, right, groups, targets) -> int:
    nl = len(left[next(iter(left))])
    nr = len(right[next(iter(right))])
    maxl = [0] * nl
    maxr = [0] * nr
    for v in left.values():
        for i, x in enumerate(v):
            if abs(x) > maxl[i]:
                maxl[i] = abs(x)
    for v in right.values():
        for i, x in enumerate(v):
            if abs(x) > maxr[i]:
                maxr[i] = abs(x)
    per_pair = 0
    for a, b, outs in groups:
        per_pair += maxl[a] * maxr[b] * sum(abs(w) for _, w in outs)
    return (per_pair * min(len(left), len(right))).bit_length() + 2


def _conv_compiled(left, right, groups, nout, targets, threads):
    import numpy as np

    lkeys = sorted(left)
    lidx = np.array(lkeys, dtype=np.int64).reshape(-1, 3)
    rkeys = list(right)
    rarr = np.array(rkeys, dtype=np.int64).reshape(-1, 3)
    if (rarr[:, :2] < 0).any() or (lidx[:, :2] < 0).any():
        raise ValueError("indices must have non-negative diagonal")
    roff = int(max(0, -rarr[:, 2].min()))
    shape = (int(rarr[:, 0].max()) + 1, int(rarr[:, 1].max()) + 1, int(rarr[:, 2].max()) + roff + 1)
    rmap = np.full(shape, -1, dtype=np.int32)
    rmap[rarr[:, 0], rarr[:, 1], rarr[:, 2] + roff] = np.arange(len(rkeys), dtype=np.int32)
    ga = np.array([g[0] for g in groups], dtype=np.int64)
    gb = np.array([g[1] for g in groups], dtype=np.int64)
    gstart = np.zeros(len(groups) + 1, dtype=np.int64)
    np.cumsum([len(g[2]) for g in groups], out=gstart[1:])
    wo = np.array([o for g in groups for o, _ in g[2]], dtype=np.int64)
    wints = [w for g in groups for _, w in g[2]]
    tarr = np.array(targets, dtype=np.int64).reshape(-1, 3)

    lobj = np.array([list(left[k]) for k in lkeys], dtype=object)
    robj = np.array([list(right[k]) for k in rkeys], dtype=object)
    bits = _bound_bits(left, right, groups, targets)
    primes = _primes(bits // 30 + 1)

    def run(p):
        lv = np.ascontiguousarray((lobj % p).astype(np.uint64))
        rv = np.ascontiguousarray((robj % p).astype(np.uint64))
        w = np.array([x % p for x in wints], dtype=np.uint64)
        chunks = np.array_split(np.arange(len(tarr)), max(1, min(threads, len(tarr))))
        if len(chunks) == 1:
            return _ckernel.conv_mod(lidx, lv, rmap, roff, rv, ga, gb, gstart, wo, w, tarr, nout, p)
        with ThreadPoolExecutor(len(chunks)) as ex:
            parts = ex.map(
                lambda ix: _ckernel.conv_mod(
                    lidx, lv, rmap, roff, rv, ga, gb, gstart, wo, w,
                    np.ascontiguousarray(tarr[ix]), nout, p,
                ),
                chunks,
            )
            return np.concatenate(list(parts))

    residues = [run(p) for p in primes]
    return _crt(residues, primes, targets, nout)


def _crt(residues, primes, targets, nout):
    x = residues[0].astype(object)
    modulus = primes[0]
    for r, p in zip(residues[1:], primes[1:]):
        inv = pow(modulus, -1, p)
        delta = ((r.astype(object) - x) * inv) % p
        x = x + modulus * delta
        modulus *= p
    half = modulus // 2
    rows = [[int(v) - modulus if v > half else int(v) for v in row] for row in x]
    return dict(zip(targets, rows))
