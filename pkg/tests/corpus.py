"""Stacky fans shared by the test modules."""
import random

from toricstack import (canonical_stacky_fan, line_stacky_fan, make_fan, make_stacky_fan,
                        root_divisors, root_line_bundle, wps_stacky_fan)

P1 = make_fan(1, [(1,), (-1,)], [[0], [1]])
P2 = make_fan(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [0, 2]])
P1xP1 = make_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [1, 2], [2, 3], [0, 3]])
BASES = {"P1": P1, "P2": P2, "P1xP1": P1xP1}

BETA1 = make_stacky_fan(1, [2], [[2, 1], [-3, 0]], [[0], [1]])
BETA2 = make_stacky_fan(1, [2], [[2, 1], [-3, 1]], [[0], [1]])
P32 = make_stacky_fan(1, [], [[2], [-3]], [[0], [1]])


def named_fans():
    out = {
        "P(6,4) beta1": BETA1,
        "P(6,4) beta2": BETA2,
        "P(3,2)": P32,
        "point B mu_2": make_stacky_fan(0, [2], [], []),
        "point": make_stacky_fan(0, [], [], []),
        "Z/2 x Z/4 over P1": make_stacky_fan(1, [2, 4], [[1, 1, 3], [-2, 0, 1]], [[0], [1]]),
    }
    for name, fan in BASES.items():
        out[f"canonical {name}"] = canonical_stacky_fan(fan)
    for a in [(1, 1), (2, 2), (2, 3), (3, 2), (4, 6)]:
        out[f"line {a}"] = line_stacky_fan(*a)
    for w in [(1, 1), (6, 4), (3, 2), (1, 1, 1), (2, 4, 6), (1, 2, 3), (2, 2, 2, 2)]:
        out[f"P{w}"] = wps_stacky_fan(w)
    return out


def random_roots(count=60, seed=20261014):
    """Random divisor roots (a_i <= 5) and line-bundle roots (b <= 4, |c_i| <= 3)."""
    rng = random.Random(seed)
    names = sorted(BASES)
    out = {}
    for k in range(count):
        base = names[k % len(names)]
        sf = canonical_stacky_fan(BASES[base])
        a = [rng.randint(1, 5) for _ in range(sf.n)]
        sf = root_divisors(sf, a)
        roots = []
        for _ in range(rng.randint(0, 2)):
            b = rng.randint(2, 4)
            c = [rng.randint(-3, 3) for _ in range(sf.n)]
            sf = root_line_bundle(sf, c, b)
            roots.append((b, tuple(c)))
        out[f"random {k}: {base} a={a} roots={roots}"] = sf
    return out


def corpus():
    return {**named_fans(), **random_roots()}
