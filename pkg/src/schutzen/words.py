"""Alphabets, words, rules and monoid presentations.

Words are plain tuples of letter indices into an :class:`Alphabet`; the empty
tuple is the identity word and prints as ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Tuple

from .errors import InputError, ParseError

Word = Tuple[int, ...]

EMPTY: Word = ()
IDENTITY_TOKEN = "1"


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise InputError("alphabet letters must be distinct")
        for tok in self.letters:
            if not tok or any(c.isspace() for c in tok) or tok == IDENTITY_TOKEN:
                raise InputError(f"invalid letter {tok!r}")

    def __len__(self):
        return len(self.letters)

    def index(self, token: str) -> int:
        try:
            return self.letters.index(token)
        except ValueError:
            raise InputError(f"undeclared letter {token!r}") from None

    @property
    def single_char(self) -> bool:
        return all(len(t) == 1 for t in self.letters)

    def parse_word(self, text: str) -> Word:
        """Parse ``text`` into a word.

        Tokens are whitespace separated; when every letter is a single
        character, tokens are additionally split into characters so that
        ``"aab"`` means ``a a b``.  The token ``1`` contributes nothing.
        """
        out = []
        for tok in text.split():
            if tok == IDENTITY_TOKEN:
                continue
            if tok in self.letters:
                out.append(self.letters.index(tok))
            elif self.single_char:
                for ch in tok:
                    if ch == IDENTITY_TOKEN:
                        continue
                    out.append(self.index(ch))
            else:
                out.append(self.index(tok))
        return tuple(out)

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return IDENTITY_TOKEN
        sep = "" if self.single_char else " "
        return sep.join(self.letters[i] for i in w)


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    id: int

    def side(self, sign: int) -> Word:
        """The side a rewrite in direction ``sign`` starts from."""
        return self.lhs if sign == 1 else self.rhs


@dataclass(frozen=True)
class MonoidPresentation:
    alphabet: Alphabet
    rules: Tuple[Rule, ...] = field(default_factory=tuple)

    def __post_init__(self):
        n = len(self.alphabet)
        for k, r in enumerate(self.rules):
            if r.id != k:
                raise InputError("rule ids must be 0..n-1 in order")
            if any(not 0 <= x < n for x in r.lhs + r.rhs):
                raise InputError(f"rule {k} uses a letter outside the alphabet")

    @classmethod
    def from_pairs(cls, letters, pairs):
        alphabet = letters if isinstance(letters, Alphabet) else Alphabet(tuple(letters))
        rules = []
        for k, (u, v) in enumerate(pairs):
            if isinstance(u, str):
                u = alphabet.parse_word(u)
            if isinstance(v, str):
                v = alphabet.parse_word(v)
            rules.append(Rule(tuple(u), tuple(v), k))
        return cls(alphabet, tuple(rules))

    def format_word(self, w):
        return self.alphabet.format_word(w)

    def parse_word(self, text):
        return self.alphabet.parse_word(text)

    def to_text(self) -> str:
        lines = ["alphabet: " + " ".join(self.alphabet.letters)]
        for r in self.rules:
            lines.append(f"rule: {self._spaced(r.lhs)} = {self._spaced(r.rhs)}")
        return "\n".join(lines) + "\n"

    def _spaced(self, w):
        return " ".join(self.alphabet.letters[i] for i in w) if w else IDENTITY_TOKEN


def parse_presentation(text: str) -> MonoidPresentation:
    alphabet = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'alphabet:' or 'rule:', got {line!r}", lineno)
        key = key.strip().lower()
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError("alphabet declared twice", lineno)
            letters = tuple(rest.split())
            if len(set(letters)) != len(letters):
                dup = next(t for t in letters if letters.count(t) > 1)
                raise ParseError(f"duplicate letter {dup!r}", lineno)
            try:
                alphabet = Alphabet(letters)
            except InputError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "rule":
            if alphabet is None:
                raise ParseError("rule before alphabet declaration", lineno)
            if rest.count("=") != 1:
                raise ParseError("rule needs exactly one '='", lineno)
            left, right = rest.split("=")
            if not left.strip() or not right.strip():
                raise ParseError("empty rule side (write 1 for the empty word)", lineno)
            try:
                pairs.append((alphabet.parse_word(left), alphabet.parse_word(right)))
            except InputError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    if alphabet is None:
        alphabet = Alphabet(())
    return MonoidPresentation.from_pairs(alphabet, pairs)


def occurs_at(w: Word, sub: Word, position: int) -> bool:
    return 0 <= position and w[position:position + len(sub)] == sub


def apply_rule_at(w: Word, rule: Rule, direction: int, position: int) -> Word:
    src, dst = (rule.lhs, rule.rhs) if direction == 1 else (rule.rhs, rule.lhs)
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if not occurs_at(w, src, position):
        raise ValueError(f"rule {rule.id} side does not occur at position {position}")
    return w[:position] + dst + w[position + len(src):]


def shortlex_key(w: Word):
    return (len(w), w)


def shortlex_less(u: Word, v: Word) -> bool:
    return shortlex_key(u) < shortlex_key(v)
