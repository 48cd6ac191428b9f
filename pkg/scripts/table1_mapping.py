"""Which cut eigenvalue does each row of the 1-d kinetic-energy table describe?

The table is indexed by n and by the parity of n and N_B. This script sets
the d = 1 cut spectrum, split by parity of the states, against both rows for
every candidate offset k -> n = k + shift and prints the ratio
eigenvalue / formula. The mapping used in cutfock.scaling.table1_mapped is
the one whose ratio is flat in k and N_B: parity-even states follow the
(n - 1/2)^2 row, parity-odd states the n^2 row, both with n = k and a
constant factor of 2 (the table is quoted for p^2/2, the matrix is p.p).
"""

import argparse

from cutfock.fockbasis import Sector, SectorSpec, VectorCutoff
from cutfock.eigensolve import eigenvalues_analytic
from cutfock.scaling import d1_scaling_table


def spectra(nb):
    even = eigenvalues_analytic(SectorSpec(1, Sector.SINGLET, nb)).values
    odd = eigenvalues_analytic(SectorSpec(1, Sector.VECTOR, nb, VectorCutoff.STRICT)).values
    return {"even": even, "odd": odd}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--nb", type=int, nargs="+", default=[199, 200])
    p.add_argument("--levels", type=int, default=5)
    args = p.parse_args()
    for nb in args.nb:
        spec = spectra(nb)
        for parity, vals in spec.items():
            for row in ("odd", "even"):
                for shift in (-1, 0, 1):
                    ratios = []
                    for k in range(1, args.levels + 1):
                        n = k + shift
                        if n < 1:
                            continue
                        ratios.append(vals[k - 1] / d1_scaling_table(n, nb, row))
                    text = " ".join(f"{r:8.5f}" for r in ratios)
                    print(f"N_B={nb:4d} states={parity:4s} row={row:4s} shift={shift:+d}: {text}")


if __name__ == "__main__":
    main()
