#!/usr/bin/env python3
"""Regenerate the bundled group corpus in data/corpus/.

Permutations are image lists on 0..n-1. Run from the repository root.
"""

import itertools
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "corpus"


def cycles(n, *cs):
    img = list(range(n))
    for c in cs:
        for i, p in enumerate(c):
            img[p] = c[(i + 1) % len(c)]
    return img


def affine(n, mul, add):
    return [(mul * i + add) % n for i in range(n)]


def product(*groups):
    """Direct product of permutation groups given as (degree, gens)."""
    total = sum(d for d, _ in groups)
    gens, offset = [], 0
    for d, gs in groups:
        for g in gs:
            img = list(range(total))
            for i in range(d):
                img[offset + i] = offset + g[i]
            gens.append(img)
        offset += d
    return total, gens


def sym(n):
    return n, [cycles(n, list(range(n))), cycles(n, [0, 1])]


def dihedral(n):
    """Dihedral group of order 2n on n points."""
    return n, [affine(n, 1, 1), affine(n, -1, 0)]


def gf8():
    # GF(8) = GF(2)[t]/(t^3 + t + 1), elements packed as bit vectors.
    def mul(a, b):
        r = 0
        for i in range(3):
            if b >> i & 1:
                r ^= a << i
        for i in (4, 3):
            if r >> i & 1:
                r ^= 0b1011 << (i - 3)
        return r
    return mul


def agl1_8(with_frobenius):
    mul = gf8()
    gens = [[x ^ 1 for x in range(8)], [mul(x, 2) for x in range(8)]]
    if with_frobenius:
        gens.append([mul(x, x) for x in range(8)])
    return 8, gens


def affine_plane_3(linear):
    """Translations of GF(3)^2 extended by the given 2x2 matrices."""
    pts = list(itertools.product(range(3), repeat=2))
    index = {p: i for i, p in enumerate(pts)}
    gens = [[index[((p[0] + 1) % 3, p[1])] for p in pts]]
    for (a, b), (c, d) in linear:
        gens.append([index[((a * p[0] + b * p[1]) % 3, (c * p[0] + d * p[1]) % 3)] for p in pts])
    return 9, gens


def quaternion():
    # Left-regular action of Q8 = {+-1, +-i, +-j, +-k} encoded as (sign, unit).
    units = ["1", "i", "j", "k"]
    table = {
        ("1", u): (1, u) for u in units
    }
    table.update({(u, "1"): (1, u) for u in units})
    table.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: i for i, e in enumerate(elems)}

    def left(g):
        out = []
        for h in elems:
            s, u = table[(g[1], h[1])]
            out.append(index[(g[0] * h[0] * s, u)])
        return out

    return 8, [left((1, "i")), left((1, "j"))]


def wreath_s3_c2():
    return 6, [cycles(6, [0, 1, 2]), cycles(6, [0, 1]), cycles(6, [0, 3], [1, 4], [2, 5])]


def perm_file(name, group, note):
    degree, gens = group
    return name, {"type": "permutation", "degree": degree, "generators": gens, "name": note}


def main():
    files = [
        perm_file("sym3", sym(3), "Sym(3)"),
        perm_file("sym4", sym(4), "Sym(4)"),
        perm_file("alt4", (4, [cycles(4, [0, 1, 2]), cycles(4, [0, 1], [2, 3])]), "Alt(4)"),
        perm_file("alt5", (5, [cycles(5, [0, 1, 2, 3, 4]), cycles(5, [0, 1, 2])]), "Alt(5)"),
        perm_file("c5_c4", (5, [affine(5, 1, 1), affine(5, 2, 0)]), "C5 : C4"),
        perm_file("c7_c3", (7, [affine(7, 1, 1), affine(7, 2, 0)]), "C7 : C3"),
        perm_file("sym3_x_sym3", product(sym(3), sym(3)), "Sym(3) x Sym(3)"),
        perm_file("sym3_x_d10", product(sym(3), dihedral(5)), "Sym(3) x D10"),
        perm_file("sym3_x_c7_c3", product(sym(3), (7, [affine(7, 1, 1), affine(7, 2, 0)])), "Sym(3) x (C7 : C3)"),
        perm_file("sym3_wr_c2", wreath_s3_c2(), "Sym(3) wr C2"),
        perm_file("agl1_8", agl1_8(False), "AGL(1,8)"),
        perm_file("agaml1_8", agl1_8(True), "AGammaL(1,8)"),
        perm_file("c3sq_c4", affine_plane_3([((0, 2), (1, 0))]), "C3^2 : C4"),
        perm_file("c3sq_q8", affine_plane_3([((0, 2), (1, 0)), ((1, 1), (1, 2))]), "C3^2 : Q8"),
        perm_file("q8", quaternion(), "Q8"),
        perm_file("c6", (6, [cycles(6, [0, 1, 2, 3, 4, 5])]), "C6"),
    ]
    for n in range(4, 21):
        files.append(perm_file(f"dihedral_{2 * n}", dihedral(n), f"D{2 * n}"))

    # Matrix backend: GF(4)^* twisted by x -> x^2 is Sym(3); SL(2,3) has a centre.
    gf4 = {"p": 2, "k": 2, "modulus": [1, 1, 1]}
    gf3 = {"p": 3, "k": 1, "modulus": [0, 1]}
    matrix_files = [
        ("gf4_semilinear", {"type": "matrix", "field": gf4, "dim": 1, "aut_order": 2, "name": "GammaL(1,4)",
                            "generators": [{"twist": 0, "matrix": [[[0, 1]]]}, {"twist": 1, "matrix": [[1]]}]}),
        ("sl2_3", {"type": "matrix", "field": gf3, "dim": 2, "aut_order": 1, "name": "SL(2,3)",
                   "generators": [{"twist": 0, "matrix": [[1, 1], [0, 1]]}, {"twist": 0, "matrix": [[1, 0], [1, 1]]}]}),
    ]

    OUT.mkdir(parents=True, exist_ok=True)
    for name, body in files + matrix_files:
        (OUT / f"{name}.json").write_text(json.dumps(body, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
