"""Time both c_k routes and print the table past the published range.

    python scripts/ck_timing.py --max-k 24 --compose-up-to 18
"""
import argparse
import time

from evenwalk.counting import ck_by_composition, ck_fast, prepare_binomials
from evenwalk.series import PUBLISHED_CK


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-k", type=int, default=24)
    parser.add_argument("--compose-up-to", type=int, default=18)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    prepare_binomials(args.max_k)
    print(f"{'k':>3} {'c_k':>30} {'dp[s]':>8} {'compose[s]':>11} note")
    prev = None
    for k in range(args.max_k + 1):
        t0 = time.perf_counter()
        fast = ck_fast(k)
        t_fast = time.perf_counter() - t0
        t_comp = ""
        note = []
        if k <= args.compose_up_to:
            t0 = time.perf_counter()
            slow = ck_by_composition(k, args.workers)
            t_comp = f"{time.perf_counter() - t0:.3f}"
            if slow != fast:
                note.append("ROUTES DISAGREE")
        if k < len(PUBLISHED_CK):
            note.append("published ok" if fast == PUBLISHED_CK[k] else "PUBLISHED MISMATCH")
        if fast >= 2 ** 63:
            note.append(">int64")
        if prev:
            note.append(f"ratio {fast / prev:.6f}")
        prev = fast
        print(f"{k:>3} {fast:>30} {t_fast:>8.4f} {t_comp:>11} {' '.join(note)}")


if __name__ == "__main__":
    main()
