"""Wall-clock timings for the exact pipeline on the largest families.

    python3 benchmarks/bench_certify.py [--repeat N]
"""
import argparse
import time

from loccw.families import build_general, build_odd_square, complete_to_basis
from loccw.locc import assemble_constraints, solution_space
from loccw.sep import distinguish, projective_measurement


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = [("odd-square", d, d, build_odd_square(d)) for d in (9, 13, 15)]
    cases += [("general", m, n, build_general(m, n)) for m, n in ((12, 11), (12, 12))]
    print(f"{'family':<12}{'dims':>7}{'rows':>7}{'solve':>9}{'complete':>10}{'separate':>10}")
    for name, m, n, (diagram, states) in cases:
        rows = assemble_constraints(states, "A").rows
        t_solve, _ = timed(lambda: [solution_space(states, p).dimension for p in "AB"], args.repeat)
        t_comp, basis = timed(lambda: complete_to_basis(diagram, states), args.repeat)

        def separate():
            meas = projective_measurement(basis)
            return [distinguish(meas, basis[i]) for i in range(len(states))]

        t_sep, _ = timed(separate, args.repeat)
        print(f"{name:<12}{f'{m}x{n}':>7}{rows:>7}{t_solve:>8.3f}s{t_comp:>9.3f}s{t_sep:>9.3f}s")


if __name__ == "__main__":
    main()
