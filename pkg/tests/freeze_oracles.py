"""Recompute the frozen reference values with the sympy oracle.

    python tests/freeze_oracles.py

Writes tests/data/oracle_values.json.  The package is used only to read the
example operators from their text form.
"""

import json
import sys
import time
from pathlib import Path

import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

from oracles import lam, mu1, mu2, op_to_sympy, sym_dres, sym_subres1  # noqa: E402
from spectralcurves import load_example  # noqa: E402


def main():
    t0 = time.time()
    L, A1, A2 = (op_to_sympy(op) for op in load_example())

    def shift(op, v):
        return [op[0] - v] + op[1:]

    pairs = {
        "1": (shift(L, lam), shift(A1, mu1)),
        "2": (shift(L, lam), shift(A2, mu2)),
        "3": (shift(A1, mu1), shift(A2, mu2)),
    }
    out = {"dres": {}, "subres1": {}}
    for key, (P, Q) in pairs.items():
        out["dres"][key] = sp.sstr(sp.expand(sym_dres(P, Q)))
        phi0, phi1 = sym_subres1(P, Q)
        out["subres1"][key] = [sp.sstr(sp.together(phi0)), sp.sstr(sp.together(phi1))]
        print(key, "done", round(time.time() - t0, 1), "s")
    path = Path(__file__).parent / "data" / "oracle_values.json"
    path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
