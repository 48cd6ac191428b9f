"""Write every figure and table data file into one directory.

    python3 scripts/make_figure_data.py --out results/
"""

import argparse
from pathlib import Path

from cutfock.cli import main as cli


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    jobs = {
        "figure1.dat": ["spectrum", "--preset", "figure1", "--format", "dat"],
        "figure2.dat": ["scaling", "--preset", "figure2", "--format", "dat"],
        "figure2.json": ["scaling", "--preset", "figure2", "--format", "json"],
        "table2.csv": ["scaling", "--preset", "table2"],
        "counts_d3.csv": ["count", "--d", "3", "--nb", "20"],
        "counts_d9.csv": ["count", "--d", "9", "--nb", "20"],
        "reconstruct_d3.dat": ["reconstruct", "--d", "3", "--format", "dat"],
        "wavefunction_d3_nb40.dat": ["wavefunction", "--d", "3", "--nb", "40", "--format", "dat"],
    }
    for name, argv in jobs.items():
        code = cli(argv + ["--out", str(args.out / name)])
        print(f"{name}: {'ok' if code == 0 else f'exit {code}'}")


if __name__ == "__main__":
    main()
