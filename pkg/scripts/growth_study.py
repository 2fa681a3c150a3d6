"""Growth of the coefficients a_{-j} against j^(M-1) for circle poles of order M.

    python scripts/growth_study.py --max-order 4 --window 256
"""

from __future__ import annotations

import argparse

from toeplitz_like.matrixrep import growth_check, symbol_coefficients
from toeplitz_like.poly import from_roots
from toeplitz_like.symbol import normalize


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--window", type=int, default=256)
    args = p.parse_args()
    print(f"{'M':>2} {'symbol':<34} {'C':>12} {'slope':>9} ok")
    for M in range(1, args.max_order + 1):
        # a pole of order M at 1 plus a simple one at i and a zero outside
        omega = normalize(from_roots([(2.0, 1)]), from_roots([(1.0, M), (1j, 1)]))
        g = growth_check(symbol_coefficients(omega, args.window))
        label = f"(z-2)/((z-1)^{M} (z-i))"
        print(f"{M:>2} {label:<34} {g.bound_constant:12.4f} {g.slope:9.4f} {g.exponent_ok}")


if __name__ == "__main__":
    main()
