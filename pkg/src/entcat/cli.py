"""Command-line front end.

Subcommands
-----------
check     classification, both conversion probabilities, screen flags
pmax      optimal conversion probability with its witness index
catalyze  verify one candidate catalyst
search    exact 2x2 feasibility or seeded randomized search
bound     admissible-catalyst bounds from a probability or a pair

Every command accepts ``--epsilon``, ``--seed``, ``--format`` and
``--renormalize``.  Spectra are given inline as comma-separated decimals
or as a path to a text file with one coefficient per line ('#' starts a
comment, blank lines are ignored); input order is free, the report
echoes the sorted coefficients actually analyzed.

Output is a flat ``key: value`` document (``--format text``, default)
or the same document as JSON (``--format json``).  Probabilities print
with 12 significant digits and identical invocations produce
byte-identical output.

Exit codes: 0 success / affirmative, 1 definite negative verdict
(candidate fails, search finds nothing), 2 invalid input, 3 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalysis import (
    catalyst_bound,
    is_catalyst,
    necessary_conditions,
    quasi_catalyst_bound,
    quasi_pmax,
)
from .errors import EntcatError, NotIncomparableError
from .search import (
    Found,
    FoundInterval,
    NonExistence,
    NotFound,
    SearchConfig,
    SearchMode,
    TrivialAlreadyTransformable,
    search_exact_p2,
    search_random,
)
from .spectra import NumericConfig, SchmidtSpectrum, make_spectrum, tensor_power
from .transform import pmax, pmax_witness, transform_report

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_USAGE = 3


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.12g" % value
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "none"
    if isinstance(value, str):
        return value
    # sequence of numbers (spectrum echo, monotone table)
    return ", ".join(_fmt(float(v)) for v in value)


def _json_token(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.12g" % value
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "null"
    if isinstance(value, str):
        return '"%s"' % value
    return "[%s]" % ", ".join(_json_token(float(v)) for v in value)


def render_document(doc: list[tuple[str, object]], fmt: str) -> str:
    """Serialize a report document to its text or JSON form."""
    if fmt == "json":
        body = ",\n".join(f'  "{k}": {_json_token(v)}' for k, v in doc)
        return "{\n%s\n}\n" % body
    return "".join(f"{k}: {_fmt(v)}\n" for k, v in doc)


def parse_document(text: str) -> dict[str, str]:
    """Parse a text-format document back into key -> printed value."""
    out: dict[str, str] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(": ")
        out[key] = value
    return out


def _parse_spectrum(arg: str, cfg: NumericConfig, renormalize: bool) -> SchmidtSpectrum:
    if os.path.exists(arg):
        values = []
        with open(arg, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                body = line.split("#", 1)[0].strip()
                if not body:
                    continue
                try:
                    values.append(float(body))
                except ValueError:
                    raise EntcatError(
                        f"{arg}:{lineno}: not a decimal coefficient: {body!r}"
                    ) from None
    else:
        try:
            values = [float(tok) for tok in arg.split(",") if tok.strip()]
        except ValueError:
            raise EntcatError(f"not a comma-separated decimal list: {arg!r}") from None
    return make_spectrum(values, cfg, renormalize=renormalize)


def _numeric_config(args: argparse.Namespace) -> NumericConfig:
    return NumericConfig(epsilon=args.epsilon, seed=args.seed)


def _emit(doc: list[tuple[str, object]], args: argparse.Namespace) -> None:
    sys.stdout.write(render_document(doc, args.format))


def _cmd_check(args: argparse.Namespace) -> int:
    cfg = _numeric_config(args)
    src = _parse_spectrum(args.source, cfg, args.renormalize)
    tgt = _parse_spectrum(args.target, cfg, args.renormalize)
    rep = transform_report(src, tgt, cfg)
    screen = necessary_conditions(src, tgt, cfg)
    doc = [
        ("command", "check"),
        ("source", src.coefficients),
        ("target", tgt.coefficients),
        ("classification", rep.classification.value),
        ("pmax_forward", rep.pmax_forward),
        ("pmax_backward", rep.pmax_backward),
        ("entropy_source", rep.entropy_source),
        ("entropy_target", rep.entropy_target),
        ("monotones_source", rep.monotones_source),
        ("monotones_target", rep.monotones_target),
        ("largest_coeff_ok", screen.largest_coeff_ok),
        ("smallest_coeff_ok", screen.smallest_coeff_ok),
        ("entropy_ok", screen.entropy_ok),
        ("incomparable", screen.incomparable),
        ("marginally_isentropic", screen.marginally_isentropic),
        ("passes", screen.passes),
    ]
    _emit(doc, args)
    return EXIT_OK


def _cmd_pmax(args: argparse.Namespace) -> int:
    cfg = _numeric_config(args)
    src = _parse_spectrum(args.source, cfg, args.renormalize)
    tgt = _parse_spectrum(args.target, cfg, args.renormalize)
    if args.copies < 1:
        raise EntcatError(f"--copies must be >= 1, got {args.copies}")
    value, wit = pmax_witness(
        tensor_power(src, args.copies), tensor_power(tgt, args.copies), cfg
    )
    doc = [
        ("command", "pmax"),
        ("source", src.coefficients),
        ("target", tgt.coefficients),
        ("copies", args.copies),
        ("pmax", value),
        ("witness_l", wit),
    ]
    _emit(doc, args)
    return EXIT_OK


def _cmd_catalyze(args: argparse.Namespace) -> int:
    cfg = _numeric_config(args)
    src = _parse_spectrum(args.source, cfg, args.renormalize)
    tgt = _parse_spectrum(args.target, cfg, args.renormalize)
    cand = _parse_spectrum(args.catalyst, cfg, args.renormalize)
    verdict = is_catalyst(src, tgt, cand, cfg)
    boost = quasi_pmax(src, tgt, cand, cfg)
    doc = [
        ("command", "catalyze"),
        ("source", src.coefficients),
        ("target", tgt.coefficients),
        ("catalyst", cand.coefficients),
        ("is_catalyst", verdict.is_catalyst),
        ("first_violation", verdict.first_violation),
        ("bound_value", verdict.bound_value),
        ("pmax_pair", verdict.pmax_pair),
        ("saturated", verdict.saturated),
        ("quasi_pmax", boost),
    ]
    _emit(doc, args)
    return EXIT_OK if verdict.is_catalyst else EXIT_NEGATIVE


def _search_doc(outcome, args: argparse.Namespace) -> tuple[list, int]:
    if isinstance(outcome, TrivialAlreadyTransformable):
        return [("outcome", "trivial_already_transformable")], EXIT_OK
    if isinstance(outcome, NonExistence):
        doc = [
            ("outcome", "non_existence"),
            ("certified", True),
            ("breakpoints_examined", outcome.breakpoints_examined),
            ("feasible_intervals", 0),
        ]
        return doc, EXIT_NEGATIVE
    if isinstance(outcome, FoundInterval):
        doc = [
            ("outcome", "found_interval"),
            ("breakpoints_examined", outcome.breakpoints_examined),
            ("feasible_intervals", len(outcome.feasible_x_intervals)),
        ]
        for i, (lo, hi) in enumerate(outcome.feasible_x_intervals, 1):
            doc.append((f"interval_{i}_lo", lo))
            doc.append((f"interval_{i}_hi", hi))
        return doc, EXIT_OK
    if isinstance(outcome, NotFound):
        doc = [
            ("outcome", "not_found"),
            ("samples_tested", outcome.samples_tested),
            ("samples_pruned_by_bound", outcome.samples_pruned_by_bound),
        ]
        if outcome.failed_conditions:
            doc.append(("failed_conditions", ", ".join(outcome.failed_conditions)))
        return doc, EXIT_NEGATIVE
    assert isinstance(outcome, Found)
    doc = [
        ("outcome", "found"),
        ("catalyst", outcome.catalyst.coefficients),
        ("is_catalyst", outcome.verdict.is_catalyst),
        ("bound_value", outcome.verdict.bound_value),
        ("pmax_pair", outcome.verdict.pmax_pair),
        ("saturated", outcome.verdict.saturated),
        ("achieved_probability", outcome.achieved_probability),
    ]
    return doc, EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    cfg = _numeric_config(args)
    if args.mode == "exact2" and args.dim != 2:
        print("error: --mode exact2 requires --dim 2", file=sys.stderr)
        return EXIT_USAGE
    if args.mode == "exact2" and args.target_prob != 1.0:
        print("error: --mode exact2 requires --target-prob 1", file=sys.stderr)
        return EXIT_USAGE
    src = _parse_spectrum(args.source, cfg, args.renormalize)
    tgt = _parse_spectrum(args.target, cfg, args.renormalize)
    head = [
        ("command", "search"),
        ("source", src.coefficients),
        ("target", tgt.coefficients),
        ("dim", args.dim),
        ("mode", args.mode),
    ]
    if args.mode == "exact2":
        outcome = search_exact_p2(src, tgt, cfg)
    else:
        head += [
            ("samples", args.samples),
            ("seed", args.seed),
            ("target_probability", float(args.target_prob)),
        ]
        sc = SearchConfig(
            p=args.dim,
            mode=SearchMode.RANDOM,
            sample_count=args.samples,
            target_probability=args.target_prob,
            cfg=cfg,
        )
        outcome = search_random(src, tgt, sc)
    body, code = _search_doc(outcome, args)
    _emit(head + body, args)
    return code


def _cmd_bound(args: argparse.Namespace) -> int:
    cfg = _numeric_config(args)
    if (args.pmax is None) == (args.pair is None):
        print("error: give exactly one of --pmax or --pair", file=sys.stderr)
        return EXIT_USAGE
    if args.pair is not None:
        src = _parse_spectrum(args.pair[0], cfg, args.renormalize)
        tgt = _parse_spectrum(args.pair[1], cfg, args.renormalize)
        pm = pmax(src, tgt, cfg)
    else:
        pm = args.pmax
    p = args.dim
    cap_product = quasi_catalyst_bound(pm, args.target_prob, p)
    cap_gamma = cap_product / p
    doc = [
        ("command", "bound"),
        ("pmax", float(pm)),
        ("dim", p),
        ("target_probability", float(args.target_prob)),
        ("max_dim_times_smallest", cap_product),
        ("max_smallest_coeff", cap_gamma),
    ]
    if p == 2:
        doc.append(("min_largest_coeff", 1.0 - cap_gamma))
    _emit(doc, args)
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--epsilon", type=float, default=1e-9,
                     help="absolute comparison tolerance (default 1e-9)")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for randomized procedures (default 0)")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default text)")
    sub.add_argument("--renormalize", action="store_true",
                     help="divide input coefficients by their sum")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entcat",
        description="Pure bipartite LOCC transformations and entanglement catalysis",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p_check = subs.add_parser("check", help="classify a pair and screen it")
    p_check.add_argument("source")
    p_check.add_argument("target")
    _add_common(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_pmax = subs.add_parser("pmax", help="optimal conversion probability")
    p_pmax.add_argument("source")
    p_pmax.add_argument("target")
    p_pmax.add_argument("--copies", type=int, default=1,
                        help="number of copies of each state (default 1)")
    _add_common(p_pmax)
    p_pmax.set_defaults(func=_cmd_pmax)

    p_cat = subs.add_parser("catalyze", help="verify a candidate catalyst")
    p_cat.add_argument("source")
    p_cat.add_argument("target")
    p_cat.add_argument("catalyst")
    _add_common(p_cat)
    p_cat.set_defaults(func=_cmd_catalyze)

    p_search = subs.add_parser("search", help="search for a catalyst")
    p_search.add_argument("source")
    p_search.add_argument("target")
    p_search.add_argument("--dim", type=int, default=2,
                          help="catalyst dimension p (default 2)")
    p_search.add_argument("--mode", choices=("exact2", "random"), default="random",
                          help="exact2: certified p=2 decision; random: sampling")
    p_search.add_argument("--samples", type=int, default=100_000,
                          help="sample count for random mode (default 100000)")
    p_search.add_argument("--target-prob", type=float, default=1.0, dest="target_prob",
                          help="search for a boost to this probability (default 1)")
    _add_common(p_search)
    p_search.set_defaults(func=_cmd_search)

    p_bound = subs.add_parser("bound", help="admissible catalyst bounds")
    p_bound.add_argument("--pmax", type=float, default=None,
                         help="conversion probability of the bare pair")
    p_bound.add_argument("--pair", nargs=2, metavar=("SOURCE", "TARGET"), default=None,
                         help="compute the probability from a pair instead")
    p_bound.add_argument("--dim", type=int, default=2,
                         help="catalyst dimension p (default 2)")
    p_bound.add_argument("--target-prob", type=float, default=1.0, dest="target_prob",
                         help="boost target for the quasi-catalysis bound (default 1)")
    _add_common(p_bound)
    p_bound.set_defaults(func=_cmd_bound)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except NotIncomparableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EntcatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())
