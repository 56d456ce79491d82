"""
Command-line interface: ``egkit <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
errors or malformed input.  JSON is the default output; ``--text`` gives
grids for reading, and ``--csv``/``--svg``/``--dot`` are offered where they
make sense.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .insertion import eg_map, insertion_trace
from .networks import (
    DEFAULT_CAP, boundary_deviation, boundary_points, conjecture_boundary,
    enumerate_132_avoiding_networks, enumerate_networks, frozen_evolution,
    overlay_svg, random_network, scaled_frozen_region, wiring_diagram_svg,
)
from .permutations import (
    format_word, is_vexillary, lehmer_code, parse_perm,
    parse_word, rothe_diagram, top_left_component,
)
from .posets import build_poset, eta_table, interval_height
from .promotion import PartialTableau, eg_inverse, evacuation, promote
from .tableaux import Tableau, column_word, staircase
from .vexillary import delta_map, delta_shifts, t0_construction, t_construction

SAMPLE_CAP = 2000
ETA_CAP = 5


class UsageError(Exception):
    """Bad arguments or malformed input; maps to exit status 2."""


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    seed: int | None = None
    caps: dict[str, int] = field(default_factory=dict)
    output_format: str = "json"
    output_path: str | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        fmt = next((f for f in ("csv", "svg", "dot", "text") if getattr(args, f, False)), "json")
        cap = getattr(args, "cap", None)
        return cls(
            subcommand=args.command,
            n=getattr(args, "n", None),
            seed=getattr(args, "seed", None),
            caps={} if cap is None else {"n": cap},
            output_format=fmt,
            output_path=args.out,
        )

    def check(self) -> None:
        """Seed and size constraints, enforced before any work starts."""
        if self.subcommand == "sample" and self.seed is None:
            raise UsageError("sample needs --seed")
        limit = self.caps.get("n")
        if limit is not None and self.n is not None and self.n > limit:
            raise UsageError(f"--n {self.n} exceeds --cap {limit}")


def _read_tableau_text(arg: str) -> str:
    """A tableau argument is inline JSON, a path to a JSON file, or ``-`` for stdin."""
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read tableau {arg!r}: {exc.strerror}") from None


def _load_tableau(arg: str) -> Tableau:
    try:
        return Tableau.from_json(_read_tableau_text(arg))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed tableau: {exc}") from None


def _load_partial(arg: str) -> PartialTableau:
    try:
        return PartialTableau.from_json(_read_tableau_text(arg))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed tableau: {exc}") from None


def _word(text: str) -> tuple[int, ...]:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str) -> tuple[int, ...]:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _staircase_q(arg: str) -> Tableau:
    q = _load_tableau(arg)
    n = len(q.shape) + 1
    if q.shape != staircase(n) or not q.is_standard():
        raise UsageError(f"expected a standard staircase tableau, got shape {q.shape}")
    return q


def _cells(cells) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# Subcommands.  Each returns (text or an iterable of text chunks, exit status).

def cmd_eg(args, cfg):
    w = _word(args.word)
    p, q = eg_map(w)
    if cfg.output_format == "text":
        return f"P:\n{p.pretty()}\nQ:\n{q.pretty()}\n", 0
    out = {"word": list(w), "P": p.to_dict(), "Q": q.to_dict()}
    if args.trace:
        out["trace"] = [{"P": t.to_dict(), "frozen": list(lam)} for t, lam in insertion_trace(w)]
    return _dump(out), 0


def cmd_eg_inverse(args, cfg):
    q = _staircase_q(args.tableau)
    w = eg_inverse(q)
    if cfg.output_format == "text":
        return format_word(w) + "\n", 0
    return _dump({"word": list(w)}), 0


def cmd_promote(args, cfg):
    t = _load_partial(args.tableau)
    if t.is_empty():
        raise UsageError("nothing to promote: tableau has no labels")
    step = promote(t)
    if cfg.output_format == "text":
        return str(step.tableau) + "\n", 0
    out = json.loads(step.tableau.to_json())
    out.update(first_cell=list(step.first_cell), right_slides=step.right_slides,
               down_slides=step.down_slides)
    return _dump(out), 0


def cmd_evacuate(args, cfg):
    t = _load_tableau(args.tableau)
    if not t.is_standard():
        raise UsageError("evacuation needs a standard tableau")
    s = evacuation(t)
    if cfg.output_format == "text":
        return s.pretty() + "\n", 0
    return _dump(s.to_dict()), 0


def _grid(cells, n: int, mark: str = "o") -> str:
    return "\n".join(
        "".join(mark if (i, j) in cells else "." for j in range(1, n + 1)) for i in range(1, n + 1)
    ) + "\n"


def cmd_diagram(args, cfg):
    sigma = _perm(args.perm)
    d = rothe_diagram(sigma)
    if cfg.output_format == "text":
        return _grid(d, len(sigma)), 0
    return _dump({
        "perm": list(sigma),
        "diagram": _cells(d),
        "lehmer_code": list(lehmer_code(sigma)),
        "top_left_component": list(top_left_component(d)),
    }), 0


def cmd_vex(args, cfg):
    sigma = _perm(args.perm)
    if not is_vexillary(sigma):
        raise UsageError(f"{format_word(sigma)} is not vexillary (contains 2143)")
    t0 = t0_construction(sigma)
    t = t_construction(sigma)
    if cfg.output_format == "text":
        return f"T0:\n{t0.grid()}\nT:\n{t.pretty()}\n", 0
    image = delta_map(t)
    return _dump({
        "perm": list(sigma),
        "T0": [list(c) for c in t0.columns],
        "T": t.to_dict(),
        "delta": _cells(image),
        "shifts": sorted([i, j, k] for (i, j), k in delta_shifts(t).items()),
        "matches_diagram": image == rothe_diagram(sigma),
    }), 0


def cmd_enumerate(args, cfg):
    cap = args.cap
    if args.avoid:
        words = enumerate_132_avoiding_networks(args.n, cap=cap, avoid=args.avoid)
    else:
        words = enumerate_networks(args.n, cap=cap)
    if cfg.output_format == "json":
        words = [list(w) for w in words]
        return _dump({"n": args.n, "avoid": args.avoid, "count": len(words), "words": words}), 0

    def lines():
        count = 0
        for w in words:
            count += 1
            yield format_word(w) + "\n"
        yield f"count {count}\n"

    return lines(), 0


def cmd_sample(args, cfg):
    net = random_network(args.n, args.seed)
    times = args.t or [0.5]
    for t in times:
        if not 0 < t < 1:
            raise UsageError(f"--t {t} must lie strictly between 0 and 1")
    trace = frozen_evolution(net)
    if cfg.output_format == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["t", "kind", "x", "y"])
        for t in times:
            for kind, pts in (("frozen", scaled_frozen_region(trace, t)),
                              ("boundary", boundary_points(trace, t)),
                              ("arc", conjecture_boundary(t, num=200))):
                for x, y in pts:
                    out.writerow([t, kind, f"{x:.6f}", f"{y:.6f}"])
        return buf.getvalue(), 0
    if cfg.output_format == "svg":
        t = times[0]
        return overlay_svg(boundary_points(trace, t), conjecture_boundary(t)), 0
    return _dump({
        "n": args.n,
        "seed": args.seed,
        "word": list(net.word),
        "deviation": {str(t): round(boundary_deviation(trace, t), 6) for t in times},
    }), 0


def cmd_wiring(args, cfg):
    w = _word(args.word)
    n = args.n if args.n is not None else max(w, default=0) + 1
    if w and max(w) > n - 1:
        raise UsageError(f"letters must lie in 1..{n - 1}")
    return wiring_diagram_svg(w, n), 0


def cmd_poset(args, cfg):
    q = _load_tableau(args.tableau)
    if not q.is_standard():
        raise UsageError("W_Q needs a standard tableau")
    cap = args.cap if args.cap is not None else 12
    if q.size > cap:
        raise UsageError(f"|Q| = {q.size} exceeds --cap {cap}")
    poset = build_poset(q, cap=cap)
    if cfg.output_format == "dot":
        return poset.to_dot(), 0
    out = {
        "Q": q.to_dict(),
        "elements": [list(w) for w in poset.elements],
        "covers": sorted([list(v), list(w)] for v, w in poset.covers),
        "minimal": [list(w) for w in poset.minimal_elements()],
        "maximal": [list(w) for w in poset.maximal_elements()],
    }
    if poset.elements and q.shape == staircase(len(q.shape) + 1):
        out["height"] = interval_height(poset, column_word(q), eg_inverse(q))
    return _dump(out), 0


def cmd_eta(args, cfg):
    if args.n > ETA_CAP and not args.long_run:
        raise UsageError(f"eta for n = {args.n} needs --long-run")
    eta = eta_table(args.n, long_run=args.long_run)
    if cfg.output_format == "json":
        return _dump({"n": args.n, "eta": list(eta)}), 0
    if cfg.output_format == "csv":
        return "i,eta\n" + "".join(f"{i},{e}\n" for i, e in enumerate(eta)), 0
    return ",".join(map(str, eta)) + "\n", 0


def cmd_verify(args, cfg):
    from .verify import run_all

    only = set(args.only) if args.only else None
    if args.level == "quick" and only is None:
        only = set(range(1, 12)) - {3, 8, 9}
    reports = run_all(only=only, echo=lambda s: print(s, file=sys.stderr, flush=True))
    lines = [str(r) for r in reports]
    failed = [r.to_dict() for r in reports if not r.ok]
    body = "\n".join(lines) + "\n"
    if failed:
        body += _dump({"failures": failed})
    return body, 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egkit", description="Edelman-Greene insertion, sorting networks and word posets."
    )
    parser.add_argument("--version", action="version", version=f"egkit {__version__}")
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_text, formats=("text",)):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        group = p.add_mutually_exclusive_group()
        group.add_argument("--json", action="store_true", help="JSON output (default)")
        for f in formats:
            group.add_argument(f"--{f}", action="store_true", help=f"{f.upper()} output")
        p.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
        return p

    p = add("eg", cmd_eg, "Edelman-Greene insertion of a word")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="include every intermediate P and its frozen shape")

    p = add("eg-inverse", cmd_eg_inverse, "sorting network of a staircase tableau")
    p.add_argument("tableau", help="inline JSON, JSON file, or - for stdin")
    p = add("promote", cmd_promote, "one elementary promotion step")
    p.add_argument("tableau")
    p = add("evacuate", cmd_evacuate, "evacuation of a standard tableau")
    p.add_argument("tableau")

    p = add("diagram", cmd_diagram, "Rothe diagram and Lehmer code")
    p.add_argument("perm")
    p = add("vex", cmd_vex, "tableau of a vexillary permutation")
    p.add_argument("perm")

    p = add("enumerate", cmd_enumerate, "list sorting networks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", choices=("132", "213"))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = add("sample", cmd_sample, "random sorting network and its frozen boundary", formats=("csv", "svg"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--t", type=float, action="append", help="time fraction; repeatable")
    p.add_argument("--cap", type=int, default=SAMPLE_CAP)

    p = add("wiring", cmd_wiring, "wiring diagram as SVG", formats=("svg",))
    p.add_argument("word")
    p.add_argument("--n", type=int)

    p = add("poset", cmd_poset, "word poset of a standard tableau", formats=("dot",))
    p.add_argument("tableau")
    p.add_argument("--cap", type=int)

    p = add("eta", cmd_eta, "height distribution over staircase tableaux", formats=("text", "csv"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--long-run", action="store_true", help="allow n = 6")

    p = add("verify", cmd_verify, "run the acceptance suite")
    p.add_argument("--level", choices=("desk", "quick"), default="desk")
    p.add_argument("--only", type=int, nargs="+", choices=range(1, 12), metavar="K")
    return parser


_TEXT_DEFAULT = {"enumerate", "eta", "verify", "wiring"}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig.from_args(args)
    if args.command in _TEXT_DEFAULT and not getattr(args, "json", False) and cfg.output_format == "json":
        cfg.output_format = "text"
    try:
        cfg.check()
        text, status = args.func(args, cfg)
    except UsageError as exc:
        print(f"egkit: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"egkit: error: {exc}", file=sys.stderr)
        return 2
    chunks = [text] if isinstance(text, str) else text
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.writelines(chunks)
    else:
        try:
            sys.stdout.writelines(chunks)
            sys.stdout.flush()
        except BrokenPipeError:
            # downstream closed early (e.g. piped into head); not an error
            devnull = os.open(os.devnull, os.O_WRONLY)
            os.dup2(devnull, sys.stdout.fileno())
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
