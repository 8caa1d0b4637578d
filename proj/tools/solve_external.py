#!/usr/bin/env python3
"""Solve an exported DIMACS instance with CaDiCaL (python-sat) and print the
model in the "v"-line convention accepted by `rado model-to-cert`.

    rado export "x^2+y^2=z^2" -n 6500 -r 2 -o pyth.cnf
    python3 tools/solve_external.py pyth.cnf > pyth.model
    rado model-to-cert pyth.cnf pyth.model -o pyth.crt
    rado verify pyth.crt

Exit status: 0 satisfiable, 1 unsatisfiable, 2 usage error.
"""

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("cnf", help="DIMACS file written by `rado export`")
    parser.add_argument("--solver", default="cadical153", help="python-sat solver name")
    args = parser.parse_args()

    cnf = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=cnf.clauses) as solver:
        if not solver.solve():
            print("s UNSATISFIABLE")
            return 1
        model = set(solver.get_model())
    # variables in no clause are left out by some solvers; any value works
    literals = [v if v in model else -v for v in range(1, cnf.nv + 1)]
    print("s SATISFIABLE")
    print("v " + " ".join(map(str, literals)) + " 0")
    return 0


if __name__ == "__main__":
    sys.exit(main())
