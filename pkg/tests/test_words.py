import pytest
from hypothesis import given
from hypothesis import strategies as st

from schutzen.errors import InputError, ParseError
from schutzen.words import (Alphabet, MonoidPresentation, Rule, apply_rule_at, parse_presentation,
                            shortlex_less)

words = st.lists(st.integers(0, 2), max_size=8).map(tuple)


def test_parse_single_rule():
    p = parse_presentation("alphabet: a\nrule: aaaa = a")
    assert p.alphabet.letters == ("a",)
    assert [(r.lhs, r.rhs) for r in p.rules] == [((0, 0, 0, 0), (0,))]


def test_parse_identity_token():
    p = parse_presentation("alphabet: a\nrule: aa = 1")
    assert p.rules[0].rhs == ()


def test_parse_duplicate_letter():
    with pytest.raises(ParseError, match="line 1: duplicate letter"):
        parse_presentation("alphabet: a a")


def test_parse_undeclared_letter_has_line():
    with pytest.raises(ParseError) as err:
        parse_presentation("# comment\nalphabet: a b\n\nrule: ab = c")
    assert err.value.line == 4


@pytest.mark.parametrize("text,msg", [
    ("rule: a = a", "before alphabet"),
    ("alphabet: a\nalphabet: b", "declared twice"),
    ("alphabet: a\nrule: a = a = a", "exactly one"),
    ("alphabet: a\nrule:  = a", "empty rule side"),
    ("alphabet: a\nfoo: a", "unknown directive"),
    ("alphabet: a\njunk", "expected"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_presentation(text)


def test_multichar_tokens():
    p = parse_presentation("alphabet: x1 y2\nrule: x1 y2 = 1\nrule: y2 x1 = 1  # inverse")
    assert p.rules[0].lhs == (0, 1)
    assert p.format_word((0, 1)) == "x1 y2"
    assert p.format_word(()) == "1"


def test_to_text_round_trip():
    p = MonoidPresentation.from_pairs("ab", [("aba", "a"), ("bb", "1")])
    q = parse_presentation(p.to_text())
    assert q == p


def test_alphabet_rejects_identity_token():
    with pytest.raises(InputError):
        Alphabet(("1",))


a4 = Rule((0, 0, 0, 0), (0,), 0)


@pytest.mark.parametrize("w,direction,pos,out", [
    ((0,) * 5, 1, 0, (0, 0)),
    ((0,) * 5, 1, 1, (0, 0)),
    ((0, 0), -1, 1, (0,) * 5),
])
def test_apply_rule_at(w, direction, pos, out):
    assert apply_rule_at(w, a4, direction, pos) == out


def test_apply_rule_mismatch():
    with pytest.raises(ValueError):
        apply_rule_at((0, 0), a4, 1, 0)


@given(words, st.data())
def test_apply_then_undo(w, data):
    rule = Rule((0, 1), (2,), 0)
    spots = [(d, k) for d in (1, -1) for k in range(len(w) + 1)
             if w[k:k + len(rule.side(d))] == rule.side(d)]
    if not spots:
        return
    d, k = data.draw(st.sampled_from(spots))
    assert apply_rule_at(apply_rule_at(w, rule, d, k), rule, -d, k) == w


def test_shortlex_examples():
    assert shortlex_less((0,), (0, 0))
    assert shortlex_less((0, 1), (1, 0))
    assert not shortlex_less((0, 1), (0, 1))


@given(words, words, words)
def test_shortlex_strict_total_order(u, v, w):
    assert sum([shortlex_less(u, v), shortlex_less(v, u), u == v]) == 1
    if shortlex_less(u, v) and shortlex_less(v, w):
        assert shortlex_less(u, w)
