"""Print H(4, 4) for a 4-component presentation built from pairwise linking numbers.

    python3 scripts/h44_table.py --mu 12=1 34=1
    python3 scripts/h44_table.py --random 5 --seed 3
"""

import argparse
import itertools
import random
from dataclasses import dataclass, field

from clover_milnor.hset import hset_generators
from clover_milnor.milnor import TanglePresentation
from clover_milnor.word import GroupWord


@dataclass
class TableConfig:
    mu: dict[tuple[int, int], int] = field(default_factory=dict)
    random: int = 0
    seed: int = 0


def linking_presentation(mu: dict[tuple[int, int], int]) -> TanglePresentation:
    longs = []
    for j in range(1, 5):
        w = GroupWord.identity(4)
        for p in range(1, 5):
            if p != j:
                w = w * GroupWord.generator(4, p, mu.get((min(p, j), max(p, j)), 0))
        longs.append(w)
    return TanglePresentation(4, longs)


def tables(cfg: TableConfig):
    if not cfg.random:
        yield cfg.mu
        return
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random):
        yield {pq: rng.randint(-3, 3) for pq in itertools.combinations(range(1, 5), 2)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu", nargs="*", default=[], help="entries pq=value with p<q")
    ap.add_argument("--random", type=int, default=0, help="number of random symmetric tables")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    mu = {}
    for item in args.mu:
        key, val = item.split("=")
        p, q = sorted(int(c) for c in key)
        mu[(p, q)] = int(val)
    cfg = TableConfig(mu, args.random, args.seed)
    for table in tables(cfg):
        print("mu:", " ".join(f"{p}{q}={v}" for (p, q), v in sorted(table.items())))
        print(hset_generators(linking_presentation(table), 1, 4).format_table())
        print()


if __name__ == "__main__":
    main()
