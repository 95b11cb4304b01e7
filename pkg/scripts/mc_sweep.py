"""Monte-Carlo estimates of (1/N)<Tr M^(4k)> over several seeds and orders.

    python scripts/mc_sweep.py --n 30 50 100 --k 1 2 3 --samples 10000 --seeds 20
"""
import argparse

from evenwalk.counting import ck_fast
from evenwalk.moments import mc_moment


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[50])
    parser.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--seeds", type=int, default=20)
    parser.add_argument("--threads", type=int, default=4)
    args = parser.parse_args()

    print("N,k,c_k,seed,mean,stderr,z")
    for N in args.n:
        for k in args.k:
            ck = ck_fast(k)
            within = 0
            for seed in range(args.seeds):
                est = mc_moment(N, k, args.samples, seed, args.threads)
                z = est.z_score(ck)
                within += abs(z) <= 5
                print(f"{N},{k},{ck},{seed},{est.value:.6f},{est.stderr:.6f},{z:.3f}")
            print(f"# N={N} k={k}: {within}/{args.seeds} within 5 s.e.")


if __name__ == "__main__":
    main()
