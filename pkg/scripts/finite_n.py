"""Exact ring-matrix moments for small N, including orders where walks can
wind around the ring (N < 4k + 2).  Reported only; nothing is asserted.

    python scripts/finite_n.py --max-n 16 --max-k 4
"""
import argparse

from evenwalk.counting import ck_fast
from evenwalk.moments import exact_moment


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--max-k", type=int, default=3)
    args = parser.parse_args()

    print("N,k,value,c_k,winding_free,difference")
    for N in range(2, args.max_n + 1):
        for k in range(args.max_k + 1):
            est = exact_moment(N, k)
            ck = ck_fast(k)
            print(f"{N},{k},{est.value},{ck},{est.winding_free},{est.value - ck}")


if __name__ == "__main__":
    main()
