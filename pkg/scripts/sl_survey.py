"""Survey of SL-moves on random presentations.

Runs the seeded property suites and prints a compact summary; with --out the
full reports are written as JSON.

    python3 scripts/sl_survey.py --seed 1 --trials 10
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from clover_milnor.verify import SUITES, run_suite


@dataclass
class SurveyConfig:
    seed: int = 0
    trials: int | None = None
    suites: tuple[str, ...] = tuple(sorted(SUITES))
    out: str | None = None


def survey(cfg: SurveyConfig) -> list[dict]:
    reports = []
    for name in cfg.suites:
        t0 = time.perf_counter()
        rep = run_suite(name, cfg.seed, cfg.trials)
        rep["seconds"] = round(time.perf_counter() - t0, 3)
        reports.append(rep)
        verdict = "PASS" if rep["passed"] else f"FAIL ({rep['failure_count']})"
        print(f"{name:16s} trials={rep['trials']:<4d} checked={rep['checked']:<7d} "
              f"{rep['seconds']:7.2f}s  {verdict}")
    return reports


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES))
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = SurveyConfig(args.seed, args.trials, tuple(args.suite or sorted(SUITES)), args.out)
    reports = survey(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": reports}, fh, indent=1)
    raise SystemExit(0 if all(r["passed"] for r in reports) else 1)


if __name__ == "__main__":
    main()
