"""Squarefree decomposition in characteristic p

Yun-style splitting with an explicit p-th root step whenever the running
polynomial has zero derivative. Over a prime field the p-th root of
Σ c_i T^(p·i) is Σ c_i T^i.
"""

from typing import List, Tuple

from app.polyring import Poly, gcd_classical


def _pth_root(f: Poly) -> Poly:
    p = f.ctx.q
    deg = len(f.coeffs) - 1
    return Poly.from_coeffs(f.ctx, [f.coeffs[i * p] for i in range(deg // p + 1)])


def squarefree_decomposition(g: Poly) -> List[Tuple[int, Poly]]:
    """
    Split g into pairwise coprime squarefree layers

    Returns (multiplicity, monic layer) pairs in increasing multiplicity with
    ∏ layer^multiplicity = g made monic. Trivial layers are omitted; constants
    give an empty list.
    """
    f = g.monic()
    if len(f.coeffs) < 2:
        return []
    one = Poly.one(g.ctx)
    layers: List[Tuple[int, Poly]] = []
    scale = 1
    while True:
        derivative = f.derivative()
        if not derivative.is_zero:
            rest = gcd_classical(f, derivative)
            run = f // rest
            i = 1
            while run != one:
                common = gcd_classical(rest, run)
                layer = run // common
                if len(layer.coeffs) > 1:
                    layers.append((i * scale, layer.monic()))
                rest = rest // common
                run = common
                i += 1
            if rest == one:
                break
            f = rest
        f = _pth_root(f)
        scale *= g.ctx.q
    layers.sort(key=lambda item: item[0])
    return layers
