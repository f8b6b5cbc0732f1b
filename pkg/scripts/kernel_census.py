"""Count kernel elements of rho by shortest length and test them against the shape grammar.

usage: python scripts/kernel_census.py [n] [max_len] [threads]
"""
import sys
import time
from collections import Counter

from conjrep.kernel import SearchConfig, match_shape, search_kernel


def main(argv):
    n = int(argv[0]) if argv else 3
    max_len = int(argv[1]) if len(argv) > 1 else 12
    threads = int(argv[2]) if len(argv) > 2 else 1
    t0 = time.perf_counter()
    found = search_kernel(SearchConfig(n, max_len, threads=threads))
    dt = time.perf_counter() - t0
    by_len = Counter(len(v.word) for v in found)
    print(f"n={n} max_len={max_len}: {len(found)} kernel elements in {dt:.1f}s")
    for length in sorted(by_len):
        print(f"  shortest length {length:2d}: {by_len[length]}")
    if n == 3:
        shaped = [v for v in found if match_shape(v.word) is not None]
        print(f"  representatives literally matching the shape grammar: {len(shaped)}")
        for v in shaped[:5]:
            print(f"    {v.word}")
    for v in found[:10]:
        print(f"  {v.word}")


if __name__ == "__main__":
    main(sys.argv[1:])
