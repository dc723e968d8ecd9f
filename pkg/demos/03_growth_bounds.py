"""Growth of the counts and the exact bound sandwich.

The count for rank n sits between a double-exponential lower bound and
two independent upper bounds, and doubling the rank squares the count at
least: 2*count(n+2) >= (2*count(n))^2.  All comparisons here are exact
integer arithmetic; the scaled logarithms 2^(-n/2) * log2(2*count) are
printed for orientation only, creeping monotonically toward the (even
and odd) growth constants.
"""

from kiselman import (
    count,
    km_upper_bound,
    limit_report,
    lower_bound,
    monotone_sequence_check,
    prefix_upper_bound,
)

MAX_RANK = 6


def main() -> None:
    counts = [(n, count(n).total) for n in range(MAX_RANK + 1)]

    header = f"{'n':>2} {'lower':>8} {'count':>8} {'prefix bound':>14} {'crude bound':>12}"
    print(header)
    print("-" * len(header))
    for n, c in counts:
        pre = prefix_upper_bound(n) if n else ""
        km = km_upper_bound(n) if n else ""
        print(f"{n:>2} {lower_bound(n):>8} {c:>8} {pre:>14} {km:>12}")

    print()
    print("doubling inequality, exact integer form:")
    for report in monotone_sequence_check(counts):
        print(f"  {report.note}: {report.lhs} <= {report.rhs}")

    print()
    print("scaled logarithms and limit estimates:")
    points, reports = limit_report(counts)
    for p in points:
        print(f"  n={p.n}: {p.scaled_log:.6f}")
    for r in reports:
        if r.name.endswith(("below-6", "sqrt2")):
            status = "holds" if r.holds else "FAILS"
            print(f"  {r.name} ({status}): {r.note}")


if __name__ == "__main__":
    main()
