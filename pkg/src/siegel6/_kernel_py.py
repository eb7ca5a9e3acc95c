"""Pure-Python partition convolution over exact integers."""

from __future__ import annotations


def conv_exact(left, right, groups, nout, targets):
    """Grouped bilinear convolution.

    ``groups`` is a list of ``(a, b, [(o, w), ...])``: the product of left
    channel ``a`` at ``n1`` and right channel ``b`` at ``n - n1`` is added,
    with weight ``w``, to output channel ``o`` at ``n``.
    """
    litems = sorted(left.items())
    by_a: dict[int, list[tuple[int, list]]] = {}
    for a, b, outs in groups:
        by_a.setdefault(a, []).append((b, outs))
    plan = list(by_a.items())
    rget = right.get
    result = {}
    for n in targets:
        t0, t1, t2 = n
        acc = [0] * nout
        for (x, y, z), lv in litems:
            if x > t0:
                break
            if y > t1:
                continue
            rv = rget((t0 - x, t1 - y, t2 - z))
            if rv is None:
                continue
            for a, bos in plan:
                la = lv[a]
                if not la:
                    continue
                for b, outs in bos:
                    prod = la * rv[b]
                    if prod:
                        for o, w in outs:
                            acc[o] += w * prod
        result[n] = acc
    return result
