"""Print the geodesic-language profile of a few stock groups.

For each group the script reports the minimal forbidden factors at a small
window, the size of the factor-excluding automaton, whether the forbidden
set is locally excluding, and the power-language behaviour of a sample
element, which stabilizes for the geodetic hosts and keeps growing in
multiplicity for the direct product Z x Z2.
"""

import argparse

from geodetic import (
    FiniteOrderError,
    build_factor_automaton,
    cayley_ball,
    check_locally_excluding,
    minimal_forbidden_factors,
    power_language,
)
from geodetic.lang import power_report_lines
from geodetic.words import format_word
from geodetic.zoo import free_group, infinite_cyclic, z2_star_z2, z_cross_z2


CASES = [
    ("free rank 2", free_group(2), 8, 2, ("a", "b")),
    ("Z2 * Z2", z2_star_z2(), 8, 2, ("a", "b")),
    ("Z", infinite_cyclic(), 8, 2, ("a",)),
    ("Z x Z2", z_cross_z2(), 7, 2, ("a", "f")),
]


def report(name, group, radius, e, base, n_max):
    spec, gens = group
    ball = cayley_ball(spec, gens, radius)
    forbidden = minimal_forbidden_factors(ball, e)
    auto = build_factor_automaton(forbidden.words, sorted(gens.labels))
    ok, counterexample = check_locally_excluding(ball, forbidden.words, radius - 1)
    print(f"== {name} (radius {radius})")
    shown = ", ".join(format_word(w) for w in forbidden.sorted_words())
    print(f"forbidden (e={e}): {shown or 'none'}")
    print(f"automaton states: {auto.state_count}")
    if ok:
        print(f"locally excluding up to length {radius - 1}: yes")
    else:
        print(f"locally excluding: no, misses {format_word(counterexample)}")
    try:
        lines = power_report_lines(power_language(ball, base, n_max))
    except FiniteOrderError as exc:
        lines = [f"power language skipped: {exc}"]
    for line in lines:
        print(line)
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=3)
    args = parser.parse_args()
    for name, group, radius, e, base in CASES:
        report(name, group, radius, e, base, args.nmax)


if __name__ == "__main__":
    main()
