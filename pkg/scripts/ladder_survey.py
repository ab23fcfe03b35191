"""Survey ladder heights and closeness counts across the host zoo.

For every host the script re-derives the geodeticity constant, runs the
scoped ladder search at widths 1 and 2, and prints the largest observed
height next to the bound A(m, k), plus the largest c_m among
asynchronously disjoint pairs next to C(m, k).  The point of the exercise
is how much slack the bounds leave on small hosts.
"""

import argparse
import random
from dataclasses import dataclass

from geodetic import (
    SearchScope,
    cayley_ball,
    close_bound_C,
    find_ladders,
    iter_disjoint_pairs,
    ladder_bound_A,
    min_geodetic_k,
)
from geodetic.zoo import (
    complete_bipartite,
    cycle_graph,
    cyclic_odd_powers,
    path_graph,
    petersen_graph,
    random_tree,
    star_graph,
)


@dataclass
class SurveyConfig:
    seed: int = 0
    max_pairs: int = 2000
    max_geodesics: int = 50
    widths: tuple = (1, 2)


def build_hosts(cfg):
    rng = random.Random(cfg.seed)
    hosts = [
        ("path P8", path_graph(8)),
        ("star S6", star_graph(6)),
        ("tree n=20", random_tree(20, rng)),
        ("tree n=40", random_tree(40, rng)),
    ]
    hosts += [(f"cycle C{n}", cycle_graph(n)) for n in range(3, 10)]
    hosts += [
        (f"K_{a},{b}", complete_bipartite(a, b))
        for a in range(2, 5)
        for b in range(a, 5)
    ]
    hosts.append(("Petersen", petersen_graph()))
    for k in range(2, 6):
        ball = cayley_ball(*cyclic_odd_powers(k), 2)
        hosts.append((f"Z{2 * k} odd-gen ball", ball))
    return hosts


def survey_host(name, host, cfg):
    if hasattr(host, "graph"):
        k, _ = min_geodetic_k(host.graph, host.is_trusted_pair)
    else:
        k, _ = min_geodetic_k(host)
    scope = SearchScope(max_pairs=cfg.max_pairs, max_geodesics=cfg.max_geodesics)
    for m in cfg.widths:
        scan = find_ladders(host, m, k, scope)
        max_height = max((r.height for r in scan.reports), default=0)
        max_close = 0
        for _, _, stats in iter_disjoint_pairs(host, m, scope):
            max_close = max(max_close, stats.c_m)
        print(
            f"{name}: k={k} m={m} ladders={len(scan.reports)} "
            f"max_height={max_height} A={ladder_bound_A(m, k)} "
            f"max_c={max_close} C={close_bound_C(m, k)}"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-pairs", type=int, default=2000)
    parser.add_argument("--max-geodesics", type=int, default=50)
    args = parser.parse_args()
    cfg = SurveyConfig(
        seed=args.seed, max_pairs=args.max_pairs, max_geodesics=args.max_geodesics
    )
    for name, host in build_hosts(cfg):
        survey_host(name, host, cfg)


if __name__ == "__main__":
    main()
