"""Compare the census index with minus the winding number just outside the circle.

    python scripts/winding_check.py --size 100
"""

from __future__ import annotations

import argparse

from toeplitz_like.corpus import CorpusConfig, corpus
from toeplitz_like.fredholm import analyze, winding_index


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=100)
    p.add_argument("--seed", type=int, default=3)
    args = p.parse_args()
    agree = total = 0
    for omega in corpus(CorpusConfig(size=args.size, seed=args.seed)):
        r = analyze(omega)
        if not r.is_fredholm:
            continue
        total += 1
        w = winding_index(omega)
        agree += w == r.index
        if w != r.index:
            print(f"mismatch: index {r.index}, winding {w}: {omega}")
    print(f"{agree}/{total} Fredholm symbols agree")


if __name__ == "__main__":
    main()
