"""Independent brute-force oracles shared by the test modules."""

import itertools

from toric_lvalues.cyclic import CyclicModule


def brute_force_tate(m: CyclicModule) -> tuple[int, int]:
    """Orders of H^0_T and H^-1_T by enumerating every element of a finite module."""
    g = m.group
    assert g.is_finite()
    mods = g.moduli
    elems = [tuple(e) for e in itertools.product(*(range(k) for k in mods))]
    s = m.sigma_rows()
    n = len(mods)

    def red(v):
        return tuple(x % k for x, k in zip(v, mods))

    def act(v):
        return red([sum(s[i][j] * v[j] for j in range(n)) for i in range(n)])

    def norm(v):
        total, w = [0] * n, v
        for _ in range(m.order):
            total = [a + b for a, b in zip(total, w)]
            w = act(w)
        return red(total)

    fixed = {v for v in elems if act(v) == v}
    norms = {norm(v) for v in elems}
    ker_n = {v for v in elems if not any(norm(v))}
    aug = {red([a - b for a, b in zip(act(v), v)]) for v in elems}
    return len(fixed) // len(norms), len(ker_n) // len(aug)
