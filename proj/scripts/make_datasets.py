#!/usr/bin/env python3
"""Generate the benchmark dataset stand-ins used by the experiment harness.

The six CSVs mirror the row counts, feature counts, class labels and
imbalance ratios of the usual UCI binary-classification benchmarks. Feature
values are synthetic (seeded), drawn from class-conditional distributions
with partial overlap so the classification task is non-trivial but
learnable.
"""

import argparse
import json
import pathlib
import zlib

import numpy as np

SPECS = [
    # name, total, positives, features, kind, pos_label, neg_label
    ("ion", 351, 126, 34, "real", "good", "bad"),
    ("spect", 267, 55, 22, "binary", "abnormal", "normal"),
    ("yeast1", 1482, 244, 8, "real", "mit", "other"),
    ("yeast2", 1482, 163, 8, "real", "me3", "other"),
    ("abal1", 731, 42, 8, "real", "9", "18"),
    ("abal2", 4177, 32, 8, "real", "19", "other"),
]


OVERLAP = 0.10  # fraction of each class drawn from the other class's model


def make_real(rng, n, n_pos, n_feat):
    """Class-conditional Gaussians with many weakly informative features:
    each informative feature shifts the positive class by a fraction of a
    sigma, so good classifiers must combine several features. A slice of
    each class is drawn from the other class's model to keep the Bayes
    error away from zero."""
    n_info = max(3, n_feat // 2)
    info = rng.choice(n_feat, size=n_info, replace=False)
    shift = rng.uniform(0.25, 0.55, size=n_info) * rng.choice([-1, 1], size=n_info)
    x = rng.normal(0.0, 1.0, size=(n, n_feat))
    x[:n_pos, info] += shift
    swap_pos = rng.random(n_pos) < OVERLAP
    x[:n_pos][swap_pos] = rng.normal(0.0, 1.0, size=(swap_pos.sum(), n_feat))
    swap_neg = rng.random(n - n_pos) < OVERLAP
    repl = rng.normal(0.0, 1.0, size=(swap_neg.sum(), n_feat))
    repl[:, info] += shift
    x[n_pos:][swap_neg] = repl
    return np.round(x, 5)


def make_binary(rng, n, n_pos, n_feat):
    p_pos = rng.uniform(0.3, 0.7, size=n_feat)
    p_neg = np.clip(p_pos + rng.uniform(-0.25, 0.25, size=n_feat), 0.05, 0.95)
    x = np.empty((n, n_feat), dtype=int)
    x[:n_pos] = rng.random((n_pos, n_feat)) < p_pos
    x[n_pos:] = rng.random((n - n_pos, n_feat)) < p_neg
    swap = rng.random(n - n_pos) < OVERLAP
    x[n_pos:][swap] = rng.random((swap.sum(), n_feat)) < p_pos
    return x


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data", type=pathlib.Path)
    ap.add_argument("--seed", default=20240915, type=int)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    manifest = {}
    for name, total, n_pos, n_feat, kind, pos_label, neg_label in SPECS:
        rng = np.random.default_rng([args.seed, zlib.crc32(name.encode())])
        x = (make_binary if kind == "binary" else make_real)(rng, total, n_pos, n_feat)
        labels = [pos_label] * n_pos + [neg_label] * (total - n_pos)
        order = rng.permutation(total)

        path = args.out / f"{name}.csv"
        with open(path, "w") as f:
            f.write(",".join(f"f{i}" for i in range(n_feat)) + ",class\n")
            for i in order:
                row = ",".join(str(v) for v in x[i])
                f.write(f"{row},{labels[i]}\n")
        manifest[name] = {
            "path": f"{name}.csv",
            "label_column": "class",
            "positive_label": pos_label,
        }
        print(f"{name}: {total} rows, {n_feat} features, {n_pos} positive")

    with open(args.out / "manifest.json", "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
