"""Small monoids used for self-checks and tests."""

from .words import MonoidPresentation

CORPUS = {
    "idempotent": ("a", [("aa", "a")]),
    "z3": ("a", [("aaaa", "a")]),
    "a6a3": ("a", [("aaaaaa", "aaa")]),
    "z4": ("ab", [("ab", "1"), ("ba", "1"), ("aaaa", "1")]),
    "rightzero": ("ab", [("aa", "a"), ("bb", "b"), ("ab", "b"), ("ba", "a")]),
    "nonregular": ("ab", [("aa", "1"), ("ab", "ba"), ("bbb", "bb")]),
    "rectband": ("ab", [("aa", "a"), ("bb", "b"), ("aba", "a"), ("bab", "b")]),
}


def corpus_presentation(name: str) -> MonoidPresentation:
    letters, pairs = CORPUS[name]
    return MonoidPresentation.from_pairs(tuple(letters), pairs)


def corpus_text(name: str) -> str:
    return corpus_presentation(name).to_text()
