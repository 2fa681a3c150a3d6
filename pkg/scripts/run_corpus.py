"""Sweep a random symbol corpus and report oracle agreement, factorization
residuals and the index census.

    python scripts/run_corpus.py --size 200 --seed 1 --out results/corpus.json
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from toeplitz_like.corpus import CorpusConfig, corpus
from toeplitz_like.factor import apply_factored, factorize, reconstruction_residual
from toeplitz_like.fredholm import analyze, kernel_basis
from toeplitz_like.matrixrep import truncated_matrix
from toeplitz_like.poly import monomial
from toeplitz_like.symbol import apply_toeplitz, taylor_coefficients


@dataclass
class SweepConfig:
    size: int = 100
    seed: int = 0
    matrix_size: int = 25
    composition_terms: int = 9


def sweep(cfg: SweepConfig) -> dict:
    symbols = corpus(CorpusConfig(size=cfg.size, seed=cfg.seed))
    col_err, rec_err, comp_err, ker_err = [], [], [], []
    indices = Counter()
    t0 = time.perf_counter()
    for omega in symbols:
        E = truncated_matrix(omega, cfg.matrix_size).entries
        worst = 0.0
        for n in range(cfg.matrix_size):
            col = taylor_coefficients(apply_toeplitz(omega, monomial(n)).result, cfg.matrix_size)
            worst = max(worst, float(np.max(np.abs(E[:, n] - col) / np.maximum(1, np.abs(col)))))
        col_err.append(worst)

        fac = factorize(omega)
        rec_err.append(reconstruction_residual(omega, fac))
        worst = 0.0
        for n in range(cfg.composition_terms):
            a = taylor_coefficients(apply_toeplitz(omega, monomial(n)).result, 30)
            b = taylor_coefficients(apply_factored(fac, monomial(n)), 30)
            worst = max(worst, float(np.max(np.abs(a - b))) / max(1.0, float(np.max(np.abs(a)))))
        comp_err.append(worst)

        r = analyze(omega)
        indices[r.index if r.is_fredholm else "non-Fredholm"] += 1
        if r.is_fredholm:
            for k in kernel_basis(omega):
                res = taylor_coefficients(apply_toeplitz(omega, k).result, 40)
                ker_err.append(float(np.max(np.abs(res), initial=0.0)))
    return {
        "config": asdict(cfg),
        "seconds": time.perf_counter() - t0,
        "max_column_error": max(col_err),
        "max_reconstruction_error": max(rec_err),
        "max_composition_error": max(comp_err),
        "max_kernel_residual": max(ker_err, default=0.0),
        "index_histogram": {str(k): v for k, v in sorted(indices.items(), key=lambda kv: str(kv[0]))},
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=SweepConfig.size)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--out", type=Path)
    args = p.parse_args()
    summary = sweep(SweepConfig(size=args.size, seed=args.seed))
    text = json.dumps(summary, indent=2, sort_keys=True)
    print(text)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text + "\n")


if __name__ == "__main__":
    main()
