"""Command-line front end: evaluation, transformation, classification, equivalence
checking and suite running over the textual grammars.

Exit codes: 0 for success or a passing check, 1 for a counterexample or failing
suite, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import itl as itl_mod
from . import oracle, tl as tl_mod
from .fo import fo_eval
from .itl import Interval, eval_interval, is_future_formula, check_itl_fragment
from .monomials import AmbiguityWitness, check_unambiguous_bounded
from .oracle import MonomialComplement, build_corpus, equiv, standard_corpus
from .rankers import alph_gamma, classify, defined_on, eval_outside
from .suites import SUITES, run_suite, suite_names
from .syntax import (
    ParseError,
    format_fo,
    format_itl,
    format_monomial,
    format_position,
    format_ranker,
    format_ranker_language,
    format_tl,
    format_word,
    parse_fo,
    parse_itl,
    parse_monomial,
    parse_position,
    parse_ranker,
    parse_tl,
    parse_word,
)
from .tl import check_fragment, TLFragmentSpec
from .transforms import (
    AmbiguousMonomialError,
    lemma1_tl_to_rankers,
    lemma2_rho,
    lemma2_theta,
    lemma3_rho,
    lemma3_theta,
    lemma4_formulas,
    lemma5_monomial_to_itl,
    lemma6_mu,
    lemma6_sigma,
    lemma7_xranker_complement,
    lemma8_monomial_to_future_itl,
    lemma9_complement_to_lazy_itl,
    prop1_relativize,
    prop2_relativize,
    simplify,
    thm5_complement_Aim,
    thm5_lazy_ranker_to_tl,
    thm5_negation_elimination,
)

_TL_TOKENS = {"X", "Y", "G", "H", "XL", "YL", "GL", "HL"}
_ITL_TOKENS = {"F", "L", "G", "H", "FL", "LL", "GL", "HL"}


def _alphabet(args) -> frozenset | None:
    return frozenset(args.alphabet) if getattr(args, "alphabet", None) else None


def _require_alphabet(args) -> frozenset:
    alph = _alphabet(args)
    if alph is None:
        raise ParseError("this command needs --alphabet", 0)
    return alph


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _corpus_for(args):
    alph = _require_alphabet(args)
    if args.finite_max is None and args.u_max is None and args.v_max is None:
        return standard_corpus(alph)
    std = standard_corpus(alph)
    return build_corpus(
        alph,
        std.finite_max if args.finite_max is None else args.finite_max,
        std.lasso_u_max if args.u_max is None else args.u_max,
        std.lasso_v_max if args.v_max is None else args.v_max,
    )


# -- eval -----------------------------------------------------------------------


def _cmd_eval(args) -> int:
    alph = _alphabet(args)
    w = parse_word(args.word, alph)
    if args.ranker is not None:
        r = parse_ranker(args.ranker, alph)
        pos = eval_outside(w, r)
        payload = {
            "command": "eval",
            "ranker": format_ranker(r),
            "word": format_word(w),
            "defined": pos is not None,
            "position": None if pos is None else format_position(pos),
        }
        text = (
            f"defined at position {format_position(pos)}" if pos is not None else "undefined"
        )
        _emit(args, payload, text)
        return 0
    if args.tl is not None:
        phi = parse_tl(args.tl, alph)
        if args.position is not None:
            p = parse_position(args.position)
            value = tl_mod.eval_at(w, phi, p)
            where = f"at position {format_position(p)}"
        else:
            value = tl_mod.models(w, phi)
            where = "at the top level"
        _emit(
            args,
            {"command": "eval", "tl": format_tl(phi), "word": format_word(w), "value": value},
            f"{str(value).lower()} {where}",
        )
        return 0
    if args.itl is not None:
        phi = parse_itl(args.itl, alph)
        if args.interval is not None:
            lo_text, _, hi_text = args.interval.partition(",")
            iv = Interval(parse_position(lo_text), parse_position(hi_text))
            value = eval_interval(w, phi, iv)
            where = f"on ({format_position(iv.lo)}; {format_position(iv.hi)})"
        else:
            value = itl_mod.models(w, phi)
            where = "on the whole word"
        _emit(
            args,
            {"command": "eval", "itl": format_itl(phi), "word": format_word(w), "value": value},
            f"{str(value).lower()} {where}",
        )
        return 0
    if args.fo is not None:
        phi = parse_fo(args.fo, alph)
        value = fo_eval(w, phi)
        _emit(
            args,
            {"command": "eval", "fo": format_fo(phi), "word": format_word(w), "value": value},
            str(value).lower(),
        )
        return 0
    raise ParseError("eval needs one of --ranker/--tl/--itl/--fo", 0)


# -- transform -------------------------------------------------------------------


def _cmd_transform(args) -> int:
    alph = _alphabet(args)
    name = args.name
    out_lines: list[str] = []
    payload: dict = {"command": "transform", "name": name}

    def tl_out(label, phi):
        payload[label] = format_tl(phi)
        out_lines.append(f"{label}: {format_tl(phi)}")

    def itl_out(label, phi):
        payload[label] = format_itl(phi)
        out_lines.append(f"{label}: {format_itl(phi)}")

    if name == "simplify":
        if args.tl is not None:
            tl_out("formula", simplify(parse_tl(args.tl, alph)))
        elif args.itl is not None:
            itl_out("formula", simplify(parse_itl(args.itl, alph)))
        else:
            raise ParseError("simplify needs --tl or --itl", 0)
    elif name == "lemma1":
        lang = lemma1_tl_to_rankers(parse_tl(_need(args.tl, "--tl"), alph))
        payload["language"] = format_ranker_language(lang)
        out_lines.append(format_ranker_language(lang))
    elif name in ("lemma2", "lemma3"):
        r = parse_ranker(_need(args.ranker, "--ranker"), alph)
        rho, theta = (
            (lemma2_rho(r), lemma2_theta(r)) if name == "lemma2" else (lemma3_rho(r), lemma3_theta(r))
        )
        tl_out("rho", rho)
        tl_out("theta", theta)
    elif name == "lemma4":
        A = frozenset(_need(args.set, "--set"))
        ainf, aim = lemma4_formulas(A, _require_alphabet(args))
        itl_out("letters-only", ainf)
        itl_out("all-infinitely-often", aim)
    elif name in ("lemma5", "lemma8", "lemma9"):
        m = parse_monomial(_need(args.monomial, "--monomial"), alph)
        builder = {
            "lemma5": lemma5_monomial_to_itl,
            "lemma8": lemma8_monomial_to_future_itl,
            "lemma9": lemma9_complement_to_lazy_itl,
        }[name]
        itl_out("formula", builder(m, _require_alphabet(args)))
    elif name == "lemma6":
        r = parse_ranker(_need(args.ranker, "--ranker"), alph)
        mu, sigma = lemma6_mu(r), lemma6_sigma(r)
        payload["mu"] = format_fo(mu)
        payload["sigma"] = format_fo(sigma)
        out_lines.append(f"mu: {format_fo(mu)}")
        out_lines.append(f"sigma: {format_fo(sigma)}")
    elif name == "lemma7":
        r = parse_ranker(_need(args.ranker, "--ranker"), alph)
        emitted = lemma7_xranker_complement(r)
        payload["rankers"] = [format_ranker(s) for s in emitted]
        out_lines.append("{" + ", ".join(format_ranker(s) for s in emitted) + "}")
    elif name == "prop1":
        tl_out("formula", prop1_relativize(parse_itl(_need(args.itl, "--itl"), alph)))
    elif name == "prop2":
        tl_out("formula", prop2_relativize(parse_itl(_need(args.itl, "--itl"), alph)))
    elif name == "thm5-neg":
        tl_out("formula", thm5_negation_elimination(parse_tl(_need(args.tl, "--tl"), alph)))
    elif name == "thm5-ranker":
        tl_out("formula", thm5_lazy_ranker_to_tl(parse_ranker(_need(args.ranker, "--ranker"), alph)))
    elif name == "thm5-aim":
        A = frozenset(_need(args.set, "--set"))
        itl_out("formula", thm5_complement_Aim(A, _require_alphabet(args)))
    elif name == "check-monomial":
        m = parse_monomial(_need(args.monomial, "--monomial"), alph)
        verdict = check_unambiguous_bounded(m, _require_alphabet(args), args.maxlen)
        if isinstance(verdict, AmbiguityWitness):
            payload["verdict"] = {"ambiguous": True, "witness": format_word(verdict.word)}
            out_lines.append(f"ambiguous, witness {format_word(verdict.word)}")
        else:
            payload["verdict"] = {"ambiguous": False, "maxlen": verdict.maxlen}
            out_lines.append(f"no witness up to length {verdict.maxlen}")
    else:
        raise ParseError(f"unknown transform {name!r}", 0)
    _emit(args, payload, "\n".join(out_lines))
    return 0


def _need(value, flag):
    if value is None:
        raise ParseError(f"this transform needs {flag}", 0)
    return value


# -- classify --------------------------------------------------------------------


def _parse_allowed(tokens: str, valid: set) -> frozenset:
    out = set()
    for raw in tokens.split(","):
        t = raw.strip()
        if t not in valid:
            raise ParseError(f"unknown modality token {t!r}", 0)
        out.add((t[0], len(t) == 2))
    return frozenset(out)


def _cmd_classify(args) -> int:
    alph = _alphabet(args)
    if args.ranker is not None:
        r = parse_ranker(args.ranker, alph)
        root, flavor = classify(r)
        payload = {
            "command": "classify",
            "ranker": format_ranker(r),
            "root": root,
            "flavor": flavor,
            "letters": sorted(alph_gamma(r)),
        }
        _emit(args, payload, f"{root}-ranker, {flavor}, letters {{{', '.join(sorted(alph_gamma(r)))}}}")
        return 0
    if args.tl is not None:
        phi = parse_tl(args.tl, alph)
        if args.allowed is None:
            raise ParseError("classify --tl needs --allowed", 0)
        spec = TLFragmentSpec(
            _parse_allowed(args.allowed, _TL_TOKENS), args.positive, args.future_rooted
        )
        ok = check_fragment(phi, spec)
        _emit(args, {"command": "classify", "tl": format_tl(phi), "member": ok}, str(ok).lower())
        return 0 if ok else 1
    if args.itl is not None:
        phi = parse_itl(args.itl, alph)
        if args.future and args.allowed is None:
            ok = is_future_formula(phi)
        elif args.allowed is not None:
            ok = check_itl_fragment(phi, _parse_allowed(args.allowed, _ITL_TOKENS), args.positive)
            if ok and args.future:
                ok = is_future_formula(phi)
        else:
            raise ParseError("classify --itl needs --allowed or --future", 0)
        _emit(args, {"command": "classify", "itl": format_itl(phi), "member": ok}, str(ok).lower())
        return 0 if ok else 1
    raise ParseError("classify needs one of --ranker/--tl/--itl", 0)


# -- equiv -----------------------------------------------------------------------


def _parse_acceptor(text: str, kind: str, alph):
    if kind == "tl":
        return parse_tl(text, alph)
    if kind == "itl":
        return parse_itl(text, alph)
    if kind == "ranker":
        return parse_ranker(text, alph)
    if kind == "monomial":
        return parse_monomial(text, alph)
    if kind == "not-monomial":
        return MonomialComplement(parse_monomial(text, alph))
    if kind == "fo":
        return parse_fo(text, alph)
    raise ParseError(f"unknown acceptor kind {kind!r}", 0)


def _cmd_equiv(args) -> int:
    alph = _require_alphabet(args)
    left = _parse_acceptor(args.left, args.left_kind, alph)
    right = _parse_acceptor(args.right, args.right_kind, alph)
    corpus = _corpus_for(args)
    ce = equiv(left, right, corpus)
    if ce is None:
        _emit(
            args,
            {"command": "equiv", "result": "pass", "words": len(corpus.words)},
            f"pass ({len(corpus.words)} words)",
        )
        return 0
    _emit(
        args,
        {"command": "equiv", "result": "counterexample", **ce.record()},
        "counterexample: word {w} left={l} right={r}".format(
            w=format_word(ce.word), l=str(ce.left).lower(), r=str(ce.right).lower()
        ),
    )
    return 1


# -- suite -----------------------------------------------------------------------


def _cmd_suite(args) -> int:
    names = suite_names() if args.name == "all" else [args.name]
    results = []
    for name in names:
        if name not in SUITES:
            raise ParseError(f"unknown suite {name!r}; available: {', '.join(suite_names())}", 0)
        results.append(run_suite(name))
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "suite": r.name,
                        "passed": r.passed,
                        "checks": r.checks,
                        "failures": r.failures,
                        "notes": r.notes,
                        "seconds": round(r.seconds, 2),
                    }
                    for r in results
                ],
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.summary())
            for line in r.failures:
                print(f"  counterexample: {line}")
            for line in r.notes:
                print(f"  note: {line}")
    return 0 if all(r.passed for r in results) else 1


# -- argument parsing ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rankertl",
        description="Rankers and unambiguous (interval) temporal logics over finite and lasso words.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, corpus=False):
        p.add_argument("--alphabet", help="declared alphabet, e.g. 'abc'")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if corpus:
            p.add_argument("--finite-max", type=int, default=None)
            p.add_argument("--u-max", type=int, default=None)
            p.add_argument("--v-max", type=int, default=None)

    p = sub.add_parser("eval", help="evaluate a ranker or formula on a word")
    p.add_argument("--word", required=True, help="finite word 'abc', lasso 'ab|ca', empty '_'")
    p.add_argument("--ranker")
    p.add_argument("--tl")
    p.add_argument("--itl")
    p.add_argument("--fo")
    p.add_argument("--position", help="start, a 1-indexed number, or inf")
    p.add_argument("--interval", help="two positions 'lo,hi'")
    common(p)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("transform", help="run a constructive translation")
    p.add_argument(
        "name",
        choices=[
            "simplify", "lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6",
            "lemma7", "lemma8", "lemma9", "prop1", "prop2",
            "thm5-neg", "thm5-ranker", "thm5-aim", "check-monomial",
        ],
    )
    p.add_argument("--ranker")
    p.add_argument("--tl")
    p.add_argument("--itl")
    p.add_argument("--monomial")
    p.add_argument("--set", help="letter set argument, e.g. 'ab'")
    p.add_argument("--maxlen", type=int, default=6)
    common(p)
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("classify", help="fragment membership and ranker classification")
    p.add_argument("--ranker")
    p.add_argument("--tl")
    p.add_argument("--itl")
    p.add_argument("--allowed", help="comma-separated modality tokens, e.g. 'X,Y,G'")
    p.add_argument("--positive", action="store_true")
    p.add_argument("--future-rooted", action="store_true")
    p.add_argument("--future", action="store_true", help="check the future-formula property")
    common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("equiv", help="differential equivalence over a bounded corpus")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--left-kind", default="tl", choices=["tl", "itl", "ranker", "monomial", "not-monomial", "fo"])
    p.add_argument("--right-kind", default="tl", choices=["tl", "itl", "ranker", "monomial", "not-monomial", "fo"])
    common(p, corpus=True)
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("suite", help="run a named check suite")
    p.add_argument("name", help=f"one of: {', '.join(suite_names())}, or 'all'")
    common(p)
    p.set_defaults(fn=_cmd_suite)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, AmbiguousMonomialError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
