"""Regenerate the bundled synthetic fixture corpus.

Word forms are built from Cyrillic syllables plus suffixes and drawn from a
Zipf-like distribution per domain, so type growth behaves like real text at
small scale. Output is committed; rerunning with the same constants rewrites
identical files.
"""
import json
import os
import random

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "heapsize", "data", "fixture")
SYLLABLES = "ба бо гу да дэ жа за их ла лу ма мо на нэ ол өд ра сү та тө ул ха хү цэ ча ша эр ял".split()
SUFFIXES = ["", "", "", "", "", "", "ын", "ийн", "д", "аар", "тай", "ууд", "ын", "ч", "г"]
DOMAINS = [
    ("C1", "News-Culture", "written", 3, 5200),
    ("C2", "News-Sports", "written", 2, 4800),
    ("C3", "Law", "written", 2, 6100),
    ("C4", "Interview", "spoken", 2, 4300),
    ("C5", "Podcast", "spoken", 1, 4500),
]


def make_lexicon(rng, size):
    words = set()
    while len(words) < size:
        stem = "".join(rng.choice(SYLLABLES) for _ in range(rng.choice((1, 2, 2, 3))))
        words.add(stem)
    return sorted(words)


def zipf_draw(rng, lexicon, s=1.35):
    weights = [1.0 / (r + 1) ** s for r in range(len(lexicon))]
    return lambda: rng.choices(lexicon, weights)[0]


def sentence(rng, draw, domain_idx):
    n = rng.randint(4, 14)
    words = []
    for i in range(n):
        w = draw() + rng.choice(SUFFIXES)
        if i == 0:
            w = w[:1].upper() + w[1:]
        r = rng.random()
        if r < 0.03:
            w = str(rng.randint(1, 2024))
        elif r < 0.045:
            w = f"{rng.randint(1, 40)}/{w}"
        elif r < 0.10:
            w += ","
        elif r < 0.115:
            w = f"«{w}»"
        elif r < 0.125:
            w = f"{rng.randint(1, 99)}-р"
        words.append(w)
    end = rng.choice(".....?!") if domain_idx >= 3 else "."
    return " ".join(words) + end


def main():
    rng = random.Random(20260101)
    shared = make_lexicon(rng, 1500)
    manifest = {"domains": []}
    for idx, (cid, label, register, nfiles, ntokens) in enumerate(DOMAINS):
        own = make_lexicon(rng, 250)
        lex = shared[:300] + own + shared[300:]
        rng.shuffle(lex)
        draw = zipf_draw(rng, lex)
        d = os.path.join(OUT, cid.lower())
        os.makedirs(d, exist_ok=True)
        per_file = ntokens // nfiles
        for f in range(nfiles):
            lines, count = [], 0
            while count < per_file:
                line = " ".join(sentence(rng, draw, idx) for _ in range(rng.randint(1, 4)))
                count += len(line.split())
                lines.append(line)
            with open(os.path.join(d, f"part{f + 1}.txt"), "w", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
        manifest["domains"].append(
            {"id": cid, "label": label, "register": register, "paths": [f"{cid.lower()}/*.txt"]}
        )
    with open(os.path.join(OUT, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, ensure_ascii=False, indent=2)
        fh.write("\n")


if __name__ == "__main__":
    main()
