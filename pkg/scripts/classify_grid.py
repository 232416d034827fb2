"""Classify every order ideal of a three-row grid by the two closure conditions.

    python3 scripts/classify_grid.py --grid 3 3 3
"""

import argparse
from collections import Counter
from itertools import product

from monolift.configuration import Configuration, check_condition3, components_artinian, monomial_ideal_from_configuration
from monolift.monomial import is_lex_segment


def order_ideals(grid):
    """Downward-closed subsets of ``[1..N1] x [1..N2] x [1..N3]`` as column heights over the first two axes."""
    N1, N2, N3 = grid
    cells = [(a, b) for a in range(1, N1 + 1) for b in range(1, N2 + 1)]
    for heights in product(range(N3 + 1), repeat=len(cells)):
        h = dict(zip(cells, heights))
        if all(h[(a, b)] <= h[(a - 1, b)] for a, b in cells if a > 1) and \
                all(h[(a, b)] <= h[(a, b - 1)] for a, b in cells if b > 1):
            yield [(a, b, c) for (a, b) in cells for c in range(1, h[(a, b)] + 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", type=int, nargs=3, default=[3, 3, 3])
    ap.add_argument("--show", type=int, default=0, help="print this many lex configurations")
    args = ap.parse_args()
    grid = tuple(args.grid)

    tally = Counter()
    shown = 0
    for members in order_ideals(grid):
        V = Configuration.from_indices(members, grid, 1)
        J = monomial_ideal_from_configuration(V)
        lex = is_lex_segment(J)
        c3 = check_condition3(V)[0]
        tally[(lex, c3)] += 1
        tally["round_trip"] += components_artinian(J, grid, 1).index_set() == V.index_set()
        if lex and shown < args.show:
            print(J)
            print(V.render(), end="\n\n")
            shown += 1
    total = sum(v for k, v in tally.items() if k != "round_trip")
    print(f"grid {grid}: {total} order ideals")
    print(f"  lex and condition 3         {tally[(True, True)]}")
    print(f"  neither                     {tally[(False, False)]}")
    print(f"  disagreements               {tally[(True, False)] + tally[(False, True)]}")
    print(f"  inversion round trips       {tally['round_trip']}")
    return 0 if tally[(True, False)] + tally[(False, True)] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
