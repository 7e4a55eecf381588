"""Command line interface.

    schutzen enumerate      --input FILE
    schutzen green          --input FILE [--h-class W] [--stab-word W]
    schutzen schutz-pres    --input FILE --h-class W [--stab-word W]
    schutzen homotopy-base  --input FILE --h-class W [--stab-word W] [--x-file F]
    schutzen verify         --input FILE --h-class W [--stab-word W]

Exit codes: 0 success, 1 input error, 2 resource cap, 3 internal failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from . import formats
from .engine import critical_circuits
from .checks import exhaustive_cases, random_cases, run_lemmas
from .errors import InputError, SchutzenError
from .grouptools import isomorphic
from .pipeline import Caps, Instance
from .schutz import build_presentation, format_tag, verify_relation
from .squier import build_homotopy_base
from .words import parse_presentation

log = logging.getLogger("schutzen")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="presentation file ('-' for stdin)")
    common.add_argument("--h-class", dest="h_class", help="word whose H-class is H")
    common.add_argument("--stab-word", dest="stab_word", default="1",
                        help="word e with h·e = h (default: the empty word)")
    common.add_argument("--max-elements", type=_positive, default=10_000)
    common.add_argument("--kb-max-rules", type=_positive, default=2000)
    common.add_argument("--path-cap", type=_positive, default=200_000)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verbose", "-v", action="store_true")

    p = _Parser(prog="schutzen", description="Schützenberger group presentations and homotopy bases")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("enumerate", parents=[common], help="element count and Cayley tables")
    sub.add_parser("green", parents=[common], help="Green classes and index sets")
    sub.add_parser("schutz-pres", parents=[common], help="the presentation ⟨B|U⟩")
    hb = sub.add_parser("homotopy-base", parents=[common], help="Y1, Y2, Y3")
    hb.add_argument("--x-file", help="JSON homotopy base for the input presentation "
                                     "(default: critical circuits of its completion)")
    v = sub.add_parser("verify", parents=[common], help="oracle comparison and lemma checks")
    v.add_argument("--samples", type=_positive, default=1000)
    v.add_argument("--corrupt-kappa", action="store_true", help=argparse.SUPPRESS)
    return p


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _instance(args):
    pres = parse_presentation(_read(args.input))
    caps = Caps(args.max_elements, args.kb_max_rules, args.path_cap)
    return Instance.build(pres, caps)


def _selector(args, inst, required=True):
    if args.h_class is None:
        if required:
            raise InputError("--h-class is required for this command")
        return None
    return inst.pres.parse_word(args.h_class)


def _emit(args, doc, lines: List[str]):
    if args.format == "json":
        sys.stdout.write(formats.dumps(doc))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_enumerate(args):
    inst = _instance(args)
    u = inst.universe
    fw = inst.pres.format_word
    n = len(u)
    doc = {
        "count": n,
        "elements": [fw(w) for w in u.elements],
        "right_cayley": [list(r) for r in u.right_cayley],
        "left_cayley": [list(r) for r in u.left_cayley],
        "complete_system": [[fw(r.lhs), fw(r.rhs)] for r in inst.system.oriented_rules],
    }
    lines = [f"{n} element" + ("" if n == 1 else "s")]
    if args.verbose or n <= 64:
        letters = inst.pres.alphabet.letters
        lines.append("elements: " + ", ".join(f"{k}:{fw(w)}" for k, w in enumerate(u.elements)))
        lines.append("right Cayley (x·a):")
        for x in range(n):
            lines.append(f"  {fw(u.word(x))}: " + " ".join(
                f"{letters[a]}→{fw(u.word(y))}" for a, y in enumerate(u.right_cayley[x])))
    return doc, lines


def _green_doc(inst, run):
    u, g = inst.universe, inst.green
    fw = inst.pres.format_word

    def cls(c):
        return [fw(u.word(x)) for x in c]

    doc = {
        "r_classes": [cls(c) for c in g.r_classes],
        "l_classes": [cls(c) for c in g.l_classes],
        "h_classes": [cls(c) for c in g.h_classes],
    }
    lines = ["R-classes: " + " | ".join(" ".join(cls(c)) for c in g.r_classes),
             "L-classes: " + " | ".join(" ".join(cls(c)) for c in g.l_classes),
             "H-classes: " + " | ".join(" ".join(cls(c)) for c in g.h_classes)]
    if run is None:
        return doc, lines
    d = run.data
    star, lam = d.star, d.lam
    name = star.name
    letters = inst.pres.alphabet.letters
    lam_doc = {str(l): cls(g.h_classes[c]) for l, c in lam.classes.items()}
    table = {f"{l},{letters[a]}": v for (l, a), v in sorted(lam.table.items())}
    doc.update({
        "H": cls(g.h_classes[d.H]),
        "h": fw(d.h),
        "e": fw(d.e),
        "Lambda": lam_doc,
        "lambda_table": table,
        "I": [name(i) for i in star.i_ids],
        "K": [name(k) for k in star.k_ids],
        "J": [name(j) for j in star.j_ids],
        "eta": name(star.eta),
        "omega": name(star.omega),
        "r": {name(i): fw(w) for i, w in sorted(d.r.items())},
    })
    lines += [
        f"H = {{{', '.join(cls(g.h_classes[d.H]))}}}   h = {fw(d.h)}   e = {fw(d.e)}",
        "Λ = {" + ", ".join(f"{l}: {{{' '.join(v)}}}" for l, v in lam_doc.items()) + "}",
        "λ·a: " + ", ".join(f"{k}→{v}" for k, v in table.items()),
        "I = {" + ", ".join(doc["I"]) + "}",
        "K = {" + ", ".join(doc["K"]) + "}",
        "J = {" + ", ".join(doc["J"]) + "}",
        f"η = {doc['eta']}   ω = {doc['omega']}",
        "r: " + ", ".join(f"{k}={v}" for k, v in doc["r"].items()),
    ]
    return doc, lines


def cmd_green(args):
    inst = _instance(args)
    h = _selector(args, inst, required=False)
    run = None if h is None else inst.schutz(h, inst.pres.parse_word(args.stab_word))
    return _green_doc(inst, run)


def _relation_rows(run, include_trivial):
    sp, d = run.sp, run.data
    rows = []
    for rel in sp.relations:
        if rel.trivial and not include_trivial:
            continue
        tag = "; ".join(format_tag(t, d) for t in rel.tags)
        rows.append((rel, tag))
    return rows


def _pres_subdoc(run, include_trivial):
    q = run.sp.q
    rows = _relation_rows(run, include_trivial)
    fw = q.format_word
    return {
        "generators": list(q.alphabet.letters),
        "relations": [[fw(r.lhs), fw(r.rhs), tag] for r, tag in rows],
    }, rows


def cmd_schutz_pres(args):
    inst = _instance(args)
    run = inst.schutz(_selector(args, inst), inst.pres.parse_word(args.stab_word))
    sub, rows = _pres_subdoc(run, args.verbose)
    failures = sum(not verify_relation(r.lhs, r.rhs, run.data) for r in run.sp.relations)
    fw = run.sp.q.format_word
    doc = {
        "presentation": sub,
        "h": inst.pres.format_word(run.data.h),
        "e": inst.pres.format_word(run.data.e),
        "verification": {"relations": len(run.sp.relations), "failures": failures},
    }
    lines = [f"generators ({len(sub['generators'])}): " + ", ".join(sub["generators"]),
             f"relations ({len(rows)}):"]
    for r, tag in rows:
        lines.append(f"  {fw(r.lhs)} = {fw(r.rhs)}    [{tag}]")
    lines.append(f"verified {len(run.sp.relations)} relations, {failures} failures")
    if failures:
        raise SchutzenError(f"{failures} relations fail verification")
    return doc, lines


def cmd_homotopy_base(args):
    inst = _instance(args)
    h = _selector(args, inst)
    e = inst.pres.parse_word(args.stab_word)
    if args.x_file:
        X = formats.load_paths(_read(args.x_file), inst.pres)
        run = inst.schutz(h, e, completed=False)
    else:
        X = [c.path for c in critical_circuits(inst.system)]
        run = inst.schutz(h, e, completed=True)
    hb, _ = build_homotopy_base(run.sp, X, path_cap=inst.caps.path_cap, group=run.group)
    sp = run.sp
    tags = ["; ".join(format_tag(t, run.data) for t in rel.tags) for rel in sp.relations]
    doc = formats.homotopy_to_json(sp.q, tags, hb.members, hb.tags)
    sizes = {t: len(hb.by_tag(t)) for t in ("Y1", "Y2", "Y3")}
    closed = hb.all_closed()
    doc["sizes"] = sizes
    doc["all_closed"] = closed
    doc["X_size"] = len(X)
    lines = [f"presentation over {'the input' if args.x_file else 'the completed system'}: "
             f"{len(sp.q.alphabet)} generators, {len(sp.relations)} relations (trivial ones included)",
             f"|X| = {doc['X_size']}   |Y1| = {sizes['Y1']}   |Y2| = {sizes['Y2']}   |Y3| = {sizes['Y3']}",
             f"closedness audit: {'all closed' if closed else 'FAILED'}"]
    if args.verbose:
        fw = sp.q.format_word
        for k, rel in enumerate(sp.relations):
            lines.append(f"  rule {k}: {fw(rel.lhs)} = {fw(rel.rhs)}    [{tags[k]}]")
        for p, t in zip(hb.members, hb.tags):
            lines.append(f"  {t}: base {fw(p.base)}, {len(p)} edges: " + " ".join(
                f"({fw(e.left)},{e.rule.id},{'+' if e.sign > 0 else '-'},{fw(e.right)})"
                for e in p.edges))
    if not closed:
        raise SchutzenError("a homotopy base member is not closed")
    return doc, lines


def cmd_verify(args):
    inst = _instance(args)
    run = inst.schutz(_selector(args, inst), inst.pres.parse_word(args.stab_word))
    if args.corrupt_kappa:
        _corrupt(run)
    direct = run.direct()
    try:
        group = run.group
        presented = group.order
        iso = isomorphic(group, direct)
        group_err = None
    except SchutzenError as exc:
        if isinstance(exc, InputError):
            raise
        presented, iso, group_err = None, False, str(exc)
    suites = run_lemmas(run.sp, random_cases(run.data, n=args.samples))
    if len(inst.universe) <= 10:
        ex = run_lemmas(run.sp, exhaustive_cases(run.data))
        for k, t in ex.items():
            s = suites[k]
            s.passed += t.passed
            s.failed += t.failed
            s.skipped += t.skipped
    size = len(inst.green.h_classes[run.H])
    ok = (group_err is None and iso and presented == size
          and all(t.failed == 0 for t in suites.values()))
    doc = {
        "H_size": size,
        "direct_order": direct.order,
        "presented_order": presented,
        "isomorphic": iso,
        "lemmas": {k: {"passed": t.passed, "failed": t.failed, "skipped": t.skipped}
                   for k, t in suites.items()},
        "ok": ok,
    }
    if group_err:
        doc["group_error"] = group_err
    lines = [f"|H| = {size}   direct group order = {direct.order}   "
             f"presented group order = {presented if presented is not None else 'n/a'}",
             f"isomorphic: {str(iso).lower()}"]
    if group_err:
        lines.append(f"presented group: {group_err}")
    for k, t in suites.items():
        lines.append(f"  {k:12s} passed {t.passed:6d}  failed {t.failed:4d}  skipped {t.skipped:6d}")
    lines.append("verification: " + ("PASS" if ok else "FAIL"))
    return doc, lines, ok


def _corrupt(run):
    """Negative-control hook: spoil one κ(a, i) entry."""
    d = run.data
    for key in sorted(d.kappa_base):
        d.kappa_base[key] = d.kappa_base[key] + (0,)
        break
    run.sp = build_presentation(d, run.sp.source)
    run._group = None


COMMANDS = {
    "enumerate": cmd_enumerate,
    "green": cmd_green,
    "schutz-pres": cmd_schutz_pres,
    "homotopy-base": cmd_homotopy_base,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        out = COMMANDS[args.command](args)
    except SchutzenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # anything else is a bug
        log.debug("internal failure", exc_info=True)
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    ok = True
    if len(out) == 3:
        doc, lines, ok = out
    else:
        doc, lines = out
    _emit(args, doc, lines)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
