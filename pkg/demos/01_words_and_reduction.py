"""Words, the gap condition, and reduction to canonical form.

Every element of the semigroup K_n has a unique shortest word
representing it.  A word is canonical exactly when between any two
occurrences of a letter a there is some letter above a and some letter
below a; anything else can be shortened by deleting a redundant
occurrence.
"""

from kiselman import Word, canonical_form, canonical_violation, generators, identity

SAMPLES = [
    ("1 1", 1),
    ("2 1 2", 2),
    ("1 2 1", 2),
    ("1 3 2 1", 3),
    ("3 1 2 3 1", 3),
    ("2 3 1 2 4 3", 4),
]


def main() -> None:
    print("reduction to canonical form")
    print("---------------------------")
    for text, rank in SAMPLES:
        word = Word.from_text(text, rank)
        reduced = canonical_form(word)
        marker = "(already canonical)" if word.letters == reduced.word.letters else ""
        print(f"  rank {rank}:  {text!r:18} -> {reduced.word.to_text()!r} {marker}")

    print()
    print("witnesses for non-canonical words")
    print("---------------------------------")
    for text, rank in SAMPLES:
        word = Word.from_text(text, rank)
        v = canonical_violation(word)
        if v is None:
            print(f"  {text!r:18} canonical")
        else:
            print(
                f"  {text!r:18} letter {v.letter} at positions {v.first_pos},{v.second_pos}"
                " has a one-sided gap"
            )

    print()
    print("multiplying elements (rank 2)")
    print("-----------------------------")
    e = identity(2)
    a, b = generators(2)
    for name, x in [("e*b", e * b), ("a*b", a * b), ("a*b*a", a * b * a), ("b*a*b", b * a * b)]:
        print(f"  {name:6} = {x.word.to_text()!r}")
    print("  the relations a*b*a = b*a*b = a*b collapse, as they must")


if __name__ == "__main__":
    main()
