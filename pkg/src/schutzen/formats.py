"""JSON documents for presentations, paths and homotopy bases.

Words are strings in the alphabet's own notation ("1" for the empty word);
paths are ``{"base": w, "edges": [{"left", "rule", "sign", "right"}]}`` with
``rule`` an index into the accompanying relation list.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence, Tuple

from .errors import InputError
from .paths import DGEdge, DGPath
from .words import Alphabet, MonoidPresentation, Rule


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def path_to_json(p: DGPath, alphabet: Alphabet) -> Dict[str, Any]:
    fw = alphabet.format_word
    return {
        "base": fw(p.base),
        "edges": [{"left": fw(e.left), "rule": e.rule.id, "sign": e.sign, "right": fw(e.right)}
                  for e in p.edges],
    }


def path_from_json(doc, pres: MonoidPresentation) -> DGPath:
    pw = pres.alphabet.parse_word
    try:
        edges = []
        for e in doc["edges"]:
            rule = pres.rules[int(e["rule"])]
            sign = int(e["sign"])
            if sign not in (1, -1):
                raise InputError(f"edge sign must be 1 or -1, got {sign}")
            edges.append(DGEdge(pw(e["left"]), rule, sign, pw(e["right"])))
        return DGPath(pw(doc["base"]), tuple(edges))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise InputError(f"malformed path document: {exc}") from None


def presentation_to_json(q: MonoidPresentation, tags: Sequence[str]) -> Dict[str, Any]:
    fw = q.alphabet.format_word
    return {
        "generators": list(q.alphabet.letters),
        "relations": [[fw(r.lhs), fw(r.rhs), tag] for r, tag in zip(q.rules, tags)],
    }


def presentation_from_json(doc) -> Tuple[MonoidPresentation, List[str]]:
    try:
        alphabet = Alphabet(tuple(doc["generators"]))
        rules, tags = [], []
        for k, (lhs, rhs, tag) in enumerate(doc["relations"]):
            rules.append(Rule(alphabet.parse_word(lhs), alphabet.parse_word(rhs), k))
            tags.append(tag)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed presentation document: {exc}") from None
    return MonoidPresentation(alphabet, tuple(rules)), tags


def homotopy_to_json(q: MonoidPresentation, tags: Sequence[str], members: Sequence[DGPath],
                     member_tags: Sequence[str]) -> Dict[str, Any]:
    return {
        "presentation": presentation_to_json(q, tags),
        "members": [{"set": t, "path": path_to_json(p, q.alphabet)}
                    for p, t in zip(members, member_tags)],
    }


def homotopy_from_json(doc):
    q, tags = presentation_from_json(doc["presentation"])
    members = [path_from_json(m["path"], q) for m in doc["members"]]
    return q, tags, members, [m["set"] for m in doc["members"]]


def load_paths(text: str, pres: MonoidPresentation) -> List[DGPath]:
    """A user-supplied homotopy base: ``{"paths": [path, ...]}`` or a bare list."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"homotopy base file is not JSON: {exc}") from None
    items = doc["paths"] if isinstance(doc, dict) else doc
    out = []
    for item in items:
        p = path_from_json(item, pres)
        if not p.closed:
            raise InputError("homotopy base member is not a closed path")
        out.append(p)
    return out
