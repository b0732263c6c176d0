"""Command-line front end.

    clover-milnor mu       -i tangle.json --seq 123
    clover-milnor mubar    -i tangle.json --seq 1212
    clover-milnor delta    -i tangle.json --seq 1234 [--k 1]
    clover-milnor slmove   -i gamma.json -i u.json --degree 4 [--k 1] [--explain]
    clover-milnor hset     -i tangle.json --k 1 --j 4
    clover-milnor classify -i c1.json -i c2.json [--explain]
    clover-milnor verify   --prop sl-congruence --seed 7

Exit codes: 0 ok, 2 bad input or parameters, 3 inequivalent, 4 property failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .classify import Verdict, compare_4clover
from .hset import hset_generators
from .milnor import (
    SeriesPresentation,
    TanglePresentation,
    delta_k,
    delta_link,
    format_sequence,
    milnor_number,
    mu_bar,
    mu_table,
    parse_sequence,
)
from .slmove import SLMoveInput, congruence_report, linking_of, transform
from .verify import SUITES, run_suite

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_INEQUIVALENT, EXIT_PROPERTY = 0, 2, 3, 4


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    seq: str | None = None
    k: int | None = None
    j: int | None = None
    degree: int | None = None
    seed: int = 0
    trials: int | None = None
    prop: str | None = None
    fmt: str = "text"
    explain: bool = False
    allow_framing: bool = False


def load_tangle(path: str, allow_framing: bool = False) -> TanglePresentation:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from None
    try:
        return TanglePresentation.from_dict(data, check_framing=not allow_framing)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _need(cfg: RunConfig, count: int) -> list[TanglePresentation]:
    if len(cfg.inputs) != count:
        raise InputError(f"'{cfg.subcommand}' needs exactly {count} --input file(s), got {len(cfg.inputs)}")
    return [load_tangle(p, cfg.allow_framing) for p in cfg.inputs]


def _seq(cfg: RunConfig, n: int):
    if cfg.seq is None:
        raise InputError("--seq is required")
    try:
        return parse_sequence(cfg.seq, n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _cmd_mu(cfg):
    (t,) = _need(cfg, 1)
    I = _seq(cfg, t.n)
    val = milnor_number(t, I)
    return {"seq": format_sequence(I, t.n), "mu": val}, str(val), EXIT_OK


def _cmd_mubar(cfg):
    (t,) = _need(cfg, 1)
    I = _seq(cfg, t.n)
    if len(I) < 2:
        raise InputError("mubar needs a sequence of length >= 2")
    res, mod = mu_bar(t, I)
    text = f"{res} (exact)" if mod == 0 else f"{res} mod {mod}"
    return {"seq": format_sequence(I, t.n), "residue": res, "modulus": mod}, text, EXIT_OK


def _cmd_delta(cfg):
    (t,) = _need(cfg, 1)
    I = _seq(cfg, t.n)
    if cfg.k is None:
        if len(I) < 2:
            raise InputError("Delta(I) needs |I| >= 2")
        val, kind = delta_link(t, I), "Delta"
    else:
        val, kind = delta_k(t, I, cfg.k), f"delta^{cfg.k}"
    return {"seq": format_sequence(I, t.n), "kind": kind, "k": cfg.k, "value": val}, str(val), EXIT_OK


def _cmd_slmove(cfg):
    gamma, u = _need(cfg, 2)
    q = cfg.degree if cfg.degree is not None else 3
    try:
        out = transform(SLMoveInput(gamma, u, q))
        m = linking_of(u)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = {
        "degree": q,
        "linking": m.tolist(),
        "series": [s.to_serializable() for s in out],
    }
    lines = [f"E(lambda'_{j}) = {s}" for j, s in enumerate(out, start=1)]
    status = EXIT_OK
    if cfg.explain or cfg.k is not None:
        before = mu_table(gamma, q + 1)
        moved = SeriesPresentation(gamma.n, tuple(out))
        after = mu_table(moved, q + 1)
        doc["mu_before"] = {format_sequence(I, gamma.n): v for I, v in before.items() if len(I) > 1}
        doc["mu_after"] = {format_sequence(I, gamma.n): v for I, v in after.items() if len(I) > 1}
        changed = [I for I in before if before[I] != after[I]]
        lines.append("changed Milnor numbers:" if changed else "no Milnor number changed")
        for I in changed:
            lines.append(f"  mu({format_sequence(I, gamma.n)}): {before[I]} -> {after[I]}")
    if cfg.k is not None:
        try:
            rows = congruence_report(gamma, u, cfg.k, q + 1)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        bad = [r for r in rows if not r.ok]
        doc["congruence"] = {
            "k": cfg.k,
            "checked": len(rows),
            "violations": [
                {"seq": format_sequence(r.seq, gamma.n), "before": r.before, "after": r.after, "modulus": r.modulus}
                for r in bad
            ],
        }
        lines.append(f"congruence mod delta^{cfg.k}: {len(rows) - len(bad)}/{len(rows)} sequences ok")
        if bad:
            status = EXIT_PROPERTY
    return doc, "\n".join(lines), status


def _cmd_hset(cfg):
    (t,) = _need(cfg, 1)
    k = 1 if cfg.k is None else cfg.k
    j = t.n if cfg.j is None else cfg.j
    try:
        L = hset_generators(t, k, j)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return L.to_dict(), L.format_table(), EXIT_OK


def _cmd_classify(cfg):
    t1, t2 = _need(cfg, 2)
    try:
        cmp = compare_4clover(t1, t2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = {"verdict": cmp.verdict.value}
    text = cmp.verdict.value
    if cfg.explain:
        doc["explanation"] = cmp.explain()
        doc["differing"] = {format_sequence(I, 4): list(v) for I, v in cmp.differing.items()}
        if cmp.intersection is not None:
            doc["intersection"] = {
                "solution": None if cmp.intersection.x is None else list(cmp.intersection.x),
                "residual": list(cmp.intersection.residual),
                "blocking_row": cmp.intersection.blocking_row,
            }
        text += "\n" + cmp.explain()
    status = EXIT_OK if cmp.verdict is Verdict.EQUIVALENT else EXIT_INEQUIVALENT
    return doc, text, status


def _cmd_verify(cfg):
    if cfg.prop is None:
        raise InputError(f"--prop is required; choose from {sorted(SUITES)}")
    try:
        rep = run_suite(cfg.prop, cfg.seed, cfg.trials)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = (f"{rep['prop']} seed={rep['seed']} trials={rep['trials']} checked={rep['checked']}: "
            + ("PASS" if rep["passed"] else f"FAIL ({rep['failure_count']} failures)"))
    return rep, text, EXIT_OK if rep["passed"] else EXIT_PROPERTY


COMMANDS = {
    "mu": _cmd_mu,
    "mubar": _cmd_mubar,
    "delta": _cmd_delta,
    "slmove": _cmd_slmove,
    "hset": _cmd_hset,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, rendered output)."""
    try:
        doc, text, status = COMMANDS[cfg.subcommand](cfg)
    except InputError as exc:
        if cfg.fmt == "machine":
            return EXIT_INPUT, _dump({"schema_version": SCHEMA_VERSION, "command": cfg.subcommand,
                                      "error": str(exc)})
        return EXIT_INPUT, f"error: {exc}"
    if cfg.fmt == "machine":
        return status, _dump({"schema_version": SCHEMA_VERSION, "command": cfg.subcommand,
                              "status": status, "result": doc})
    return status, text


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", action="append", default=[], dest="inputs",
                        help="tangle JSON file (repeatable)")
    common.add_argument("--seq", help="sequence, e.g. 1234 or 10,2,3")
    common.add_argument("--k", type=int)
    common.add_argument("--j", type=int)
    common.add_argument("--degree", type=int, help="truncation degree q")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["text", "machine"], default="text", dest="fmt")
    common.add_argument("--explain", action="store_true")
    common.add_argument("--allow-framing", action="store_true",
                        help="accept longitudes with nonzero self exponent sum")

    parser = argparse.ArgumentParser(prog="clover-milnor", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("mu", parents=[common], help="Milnor number mu(I)")
    sub.add_parser("mubar", parents=[common], help="mu(I) modulo Delta(I)")
    sub.add_parser("delta", parents=[common], help="delta^k(I) with --k, else Delta(I)")
    sub.add_parser("slmove", parents=[common], help="apply the SL-move given by a string link")
    sub.add_parser("hset", parents=[common], help="affine lattice H(2k+2, j)")
    sub.add_parser("classify", parents=[common], help="edge-homotopy test for 4-clover links")
    v = sub.add_parser("verify", parents=[common], help="seeded randomized property suites")
    v.add_argument("--prop", choices=sorted(SUITES), required=True)
    v.add_argument("--trials", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        inputs=args.inputs,
        seq=args.seq,
        k=args.k,
        j=args.j,
        degree=args.degree,
        seed=args.seed,
        trials=getattr(args, "trials", None),
        prop=getattr(args, "prop", None),
        fmt=args.fmt,
        explain=args.explain,
        allow_framing=args.allow_framing,
    )
    status, out = run(cfg)
    stream = sys.stderr if status == EXIT_INPUT and cfg.fmt == "text" else sys.stdout
    print(out, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
