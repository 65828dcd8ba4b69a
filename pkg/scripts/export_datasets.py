"""Regenerate the vendored benchmark CSVs from scikit-learn's bundled copies.

Dev tool only; the package itself never imports scikit-learn. Run from the
repo root:

    python scripts/export_datasets.py

Output format (see qensemble.data): header line, then one row per sample
with the feature values followed by the integer class label.
"""

from pathlib import Path

from sklearn.datasets import load_breast_cancer, load_iris, load_wine

OUT = Path(__file__).resolve().parent.parent / "src" / "qensemble" / "datasets"

LOADERS = {
    "iris": load_iris,
    "wine": load_wine,
    "breast_cancer": load_breast_cancer,
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, loader in LOADERS.items():
        bunch = loader()
        x, y = bunch.data, bunch.target
        path = OUT / f"{name}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            cols = [f"f{j}" for j in range(x.shape[1])] + ["label"]
            fh.write(",".join(cols) + "\n")
            for row, label in zip(x, y):
                cells = [repr(float(v)) for v in row] + [str(int(label))]
                fh.write(",".join(cells) + "\n")
        print(f"wrote {path} ({x.shape[0]} samples, {x.shape[1]} features)")


if __name__ == "__main__":
    main()
