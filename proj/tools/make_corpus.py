#!/usr/bin/env python3
"""Regenerates corpus/*.json from explicit matrix models.

Every structure constant is computed from sympy matrices (exact rationals and
Gaussian rationals), independently of the C++ library, so the corpus doubles
as a test oracle.

    python3 tools/make_corpus.py [outdir]
"""

import json
import pathlib
import sys

import sympy as sp

I = sp.I
HALF = sp.Rational(1, 2)


def scalar(z):
    z = sp.nsimplify(sp.expand(z))
    re, im = sp.re(z), sp.im(z)
    if im == 0:
        return str(sp.Rational(re))
    return {"re": str(sp.Rational(re)), "im": str(sp.Rational(im))}


def unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def coords(basis, m):
    """Coordinates of matrix m in the given matrix basis (exact solve)."""
    rows = [sp.Matrix([b.reshape(b.rows * b.cols, 1)]) for b in basis]
    a = sp.Matrix.hstack(*rows)
    sol, params = a.gauss_jordan_solve(m.reshape(m.rows * m.cols, 1))
    if params.shape[0]:
        raise ValueError("basis is not independent")
    return [sp.simplify(x) for x in sol]


def sparse(basis, op, mode):
    out = []
    n = len(basis)
    for i in range(n):
        for j in range(n):
            if mode == "anti" and j <= i:
                continue
            if mode == "sym" and j < i:
                continue
            for k, c in enumerate(coords(basis, op(basis[i], basis[j]))):
                if c != 0:
                    out.append([i, j, k, scalar(c)])
    return out


def two_product(label, basis, bracket, tau, unit_coords):
    return {
        "label": label,
        "dim": len(basis),
        "field": "real",
        "unit": [scalar(c) for c in unit_coords],
        "bracket": sparse(basis, bracket, "anti"),
        "tau": sparse(basis, tau, "sym"),
    }


def assoc(label, basis, product, unit_coords, star=None, field="complex"):
    doc = {
        "label": label,
        "dim": len(basis),
        "field": field,
        "unit": [scalar(c) for c in unit_coords],
        "product": sparse(basis, product, "all"),
    }
    if star is not None:
        n = len(basis)
        # Column k holds star(e_k) = S conj(e_k) = S e_k.
        s = sp.zeros(n, n)
        for k, b in enumerate(basis):
            for r, c in enumerate(coords(basis, star(b))):
                s[r, k] = c
        doc["star"] = {"matrix": [[scalar(s[r, c]) for c in range(n)] for r in range(n)], "conjugate": True}
    return doc


def block_diag_basis(sizes):
    """Matrix units of a block-diagonal algebra, block by block."""
    total = sum(sizes)
    out, off = [], 0
    for n in sizes:
        for a in range(n):
            for b in range(n):
                out.append(unit(total, off + a, off + b))
        off += n
    return out


def pauli():
    sx = sp.Matrix([[0, 1], [1, 0]])
    sy = sp.Matrix([[0, -I], [I, 0]])
    sz = sp.Matrix([[1, 0], [0, -1]])
    basis = [sp.eye(2), sx, sy, sz]
    return two_product(
        "pauli",
        basis,
        lambda a, b: -I * (a * b - b * a),
        lambda a, b: HALF * (a * b + b * a),
        [1, 0, 0, 0],
    )


def poisson3(label, xy):
    # Basis 1, x, y; tau(1, v) = v and tau vanishes on pairs of non-units.
    n = 3
    return {
        "label": label,
        "dim": n,
        "field": "real",
        "unit": ["1", "0", "0"],
        "bracket": [[1, 2, xy, "1"]],
        "tau": [[0, 0, 0, "1"], [0, 1, 1, "1"], [0, 2, 2, "1"]],
    }


def m2r_jordan():
    basis = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)]
    return two_product(
        "m2r-jordan",
        basis,
        lambda a, b: a * b - b * a,
        lambda a, b: HALF * (a * b + b * a),
        [1, 0, 0, 1],
    )


def v2():
    basis = [unit(2, 0, 0), unit(2, 1, 1)]
    # star(a, b) = (conj b, conj a); on basis coordinates the swap.
    return assoc("v2", basis, lambda a, b: a * b, [1, 1], star=lambda m: sp.Matrix([[m[1, 1], 0], [0, m[0, 0]]]))


def m2c_indefinite():
    h = sp.diag(1, -1)
    basis = [unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)]
    return assoc("m2c-indefinite", basis, lambda a, b: a * b, [1, 0, 0, 1], star=lambda m: h.inv() * m.H * h)


# Fixed integer unimodular basis change for the disguised C + M2(C) entry;
# column k is the new basis vector k in matrix-unit coordinates.
C_PLUS_M2_G = sp.Matrix(
    [
        [1, 0, 1, 0, 0],
        [1, 1, 0, 0, 1],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 1, 1],
    ]
)


def c_plus_m2():
    units = block_diag_basis([1, 2])
    g = C_PLUS_M2_G
    assert g.det() in (1, -1)
    basis = [sum((g[r, k] * units[r] for r in range(5)), sp.zeros(3, 3)) for k in range(5)]
    u = coords(basis, sp.eye(3))
    return assoc("c-plus-m2", basis, lambda a, b: a * b, u, star=lambda m: m.H)


def cn_diagonal(n=3):
    basis = [unit(n, k, k) for k in range(n)]
    return assoc("cn-diagonal", basis, lambda a, b: a * b, [1] * n, star=lambda m: m.H)


def dual_numbers():
    x = sp.Matrix([[0, 1], [0, 0]])
    basis = [sp.eye(2), x]
    # star fixes 1 and x (conjugating coefficients): a + b x -> conj(a) + conj(b) x.
    return assoc(
        "dual-numbers", basis, lambda a, b: a * b, [1, 0], star=lambda m: m.conjugate()
    )


def dump(doc):
    """One top-level key per line, one tensor entry or matrix row per line."""
    lines = []
    for key, val in doc.items():
        if key in ("bracket", "tau", "product"):
            body = ",\n    ".join(json.dumps(e) for e in val)
            lines.append(f'  "{key}": [\n    {body}\n  ]')
        elif key == "star":
            rows = ",\n      ".join(json.dumps(r) for r in val["matrix"])
            lines.append(f'  "star": {{\n    "matrix": [\n      {rows}\n    ],\n    "conjugate": {json.dumps(val["conjugate"])}\n  }}')
        else:
            lines.append(f'  "{key}": {json.dumps(val)}')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "corpus")
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "pauli": pauli(),
        "poisson3": poisson3("poisson3", 1),
        "bad-poisson": poisson3("bad-poisson", 0),
        "m2r-jordan": m2r_jordan(),
        "v2": v2(),
        "m2c-indefinite": m2c_indefinite(),
        "c-plus-m2": c_plus_m2(),
        "cn-diagonal": cn_diagonal(),
        "dual-numbers": dual_numbers(),
    }
    for name, doc in docs.items():
        (out / f"{name}.json").write_text(dump(doc))
        print(f"wrote {out / name}.json")


if __name__ == "__main__":
    main()
