"""Compare the compiled and pure-Python tokenizer kernels.

    python benchmarks/bench_tokenize.py [--tokens 2000000] [--repeat 3]

Text is synthetic Cyrillic with punctuation, digits and slashes so every
branch of the splitting rules is exercised.
"""
import argparse
import random
import time
from collections import Counter

from heapsize import _tokenize_py

try:
    from heapsize import _tokenize_cy
except ImportError:
    _tokenize_cy = None


def synthetic_text(n_tokens, seed=1):
    rng = random.Random(seed)
    syl = "ба бо гу да дэ жа за их ла лу ма мо на нэ ол өд ра сү та тө ул ха хү".split()
    words = ["".join(rng.choice(syl) for _ in range(rng.randint(1, 3))) for _ in range(5000)]
    out = []
    for i in range(n_tokens):
        w = rng.choice(words)
        r = rng.random()
        if r < 0.05:
            w += ","
        elif r < 0.08:
            w = str(rng.randint(1, 2024))
        elif r < 0.09:
            w = f"{rng.randint(1, 9)}/{w}"
        elif r < 0.15:
            w += "."
        out.append(w)
        out.append("\n" if i % 15 == 14 else " ")
    return "".join(out)


def bench(fn, text, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(text, True, False)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tokens", type=int, default=2_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    text = synthetic_text(args.tokens)
    t_py, out_py = bench(_tokenize_py.split_forms, text, args.repeat)
    print(f"python kernel : {t_py:8.3f} s  ({args.tokens / t_py / 1e6:6.2f} M raw tokens/s)")
    if _tokenize_cy is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return
    t_cy, out_cy = bench(_tokenize_cy.split_forms, text, args.repeat)
    assert out_cy == out_py, "kernels disagree"
    print(f"cython kernel : {t_cy:8.3f} s  ({args.tokens / t_cy / 1e6:6.2f} M raw tokens/s)")
    print(f"speed-up      : {t_py / t_cy:8.2f}x")
    t0 = time.perf_counter()
    Counter(out_cy)
    print(f"(inventory count on top: {time.perf_counter() - t0:.3f} s)")


if __name__ == "__main__":
    main()
