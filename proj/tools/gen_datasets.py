#!/usr/bin/env python3
"""Regenerates the bundled surname-like datasets in data/.

The lists are synthetic: surnames assembled from common English, Scottish,
Irish and French-Canadian fragments with a fixed seed, so the files are
reproducible and carry no personal data.
"""

import pathlib
import random

ONSETS = ["B", "Br", "C", "Ch", "Cl", "Cr", "D", "Dr", "F", "Fr", "G", "Gr",
          "H", "J", "K", "L", "M", "N", "P", "Pr", "R", "S", "Sh", "St", "T",
          "Th", "Tr", "V", "W", "Wh", "Y", "Z", "A", "E", "O", "I", "U"]
NUCLEI = ["a", "e", "i", "o", "u", "ai", "ea", "ee", "oo", "ou", "y", "ie"]
CODAS = ["", "n", "r", "l", "s", "t", "d", "ck", "ng", "rd", "ll", "nn", "m",
         "st", "rt", "x"]
SUFFIXES = ["", "", "", "son", "ton", "ley", "man", "er", "ford", "well",
            "ing", "by", "field", "worth", "ard", "ette", "eau", "ier"]
PREFIXES = ["", "", "", "", "", "", "", "", "Mc", "Mac", "O'", "Le", "St. ",
            "Van ", "De"]


def surname(rng: random.Random) -> str:
    core = rng.choice(ONSETS) + rng.choice(NUCLEI) + rng.choice(CODAS)
    if rng.random() < 0.35:
        core += rng.choice(NUCLEI) + rng.choice(CODAS)
    core += rng.choice(SUFFIXES)
    prefix = rng.choice(PREFIXES)
    if prefix in ("Le", "De"):
        core = core[0].lower() + core[1:]
    name = prefix + core
    if rng.random() < 0.03:
        name += "-" + rng.choice(ONSETS) + rng.choice(NUCLEI) + "r"
    return name


def generate(seed: int, size: int, unique: bool) -> list[str]:
    rng = random.Random(seed)
    names: list[str] = []
    seen: set[str] = set()
    pool: list[str] = []
    while len(names) < size:
        if not unique and pool and rng.random() < 0.12:
            names.append(rng.choice(pool))  # shared family names
            continue
        name = surname(rng)
        if unique and name in seen:
            continue
        seen.add(name)
        pool.append(name)
        names.append(name)
    rng.shuffle(names)
    return names


def main() -> None:
    data = pathlib.Path(__file__).resolve().parent.parent / "data"
    data.mkdir(exist_ok=True)
    for name, seed, size, unique in [("writers", 96, 96, True),
                                     ("representatives", 394, 394, False),
                                     ("graduates", 1369, 1369, False)]:
        entries = generate(seed, size, unique)
        header = f"# {name}: {size} synthetic surnames, one per line\n"
        (data / f"{name}.txt").write_text(header + "\n".join(entries) + "\n")


if __name__ == "__main__":
    main()
