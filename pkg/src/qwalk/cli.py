"""``qwalk``: classify step sets, count walks, compute groups, verify closed forms, guess recurrences."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import acceptance, closedforms, group, guess
from .enumeration import SLICES, count_totals, count_walks, sequence_csv, slice as walk_slice
from .stepset import (CLASS_NAMES, StepSetError, classify, enumerate_all_classes, is_singular,
                      reflect, resolve_steps, symmetry_report)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    order: int | None = None
    length: int = 30
    group_bound: int = group.DEFAULT_ELEMENT_BOUND
    degree_bound: int = group.DEFAULT_DEGREE_BOUND
    guess_order: int = guess.DEFAULT_ORDER
    guess_degree: int = guess.DEFAULT_DEGREE
    terms: int = guess.DEFAULT_TERMS
    guard: int = guess.DEFAULT_GUARD
    fmt: str = "text"
    out: str | None = None
    jobs: int = 1

    def validate(self) -> None:
        for name in ("length", "group_bound", "degree_bound", "guess_order", "terms", "jobs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.order is not None and self.order <= 0:
            raise ValueError("--order must be positive")
        if self.guess_degree < 0 or self.guard < 0:
            raise ValueError("--guess-degree and --guard must be nonnegative")


def progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def as_json(obj) -> str:
    return json.dumps(obj, indent=2)


# -- subcommands ------------------------------------------------------------------


def cmd_classify(args, cfg: RunConfig) -> int:
    s = resolve_steps(args.steps)
    cid = classify(s)
    rep = symmetry_report(s)
    record = {"steps": str(s), "class": str(cid), "index": cid.table_row,
              "name": CLASS_NAMES.get(cid.index, "") if cid.kind != "empty" else "no valid walk",
              "singular": cid.kind == "singular", "reflect_partner": str(reflect(s)),
              "symmetry": vars(rep)}
    if cfg.fmt == "json":
        emit(cfg, as_json(record))
    elif cfg.fmt == "csv":
        keys = ["steps", "class", "index", "name", "singular", "reflect_partner"]
        emit(cfg, ",".join(keys) + "\n" + ",".join(f'"{record[k]}"' for k in keys))
    else:
        lines = [f"{record['steps']}: {record['class']}"
                 + (f" ({record['name']})" if record["name"] else ""),
                 f"singular: {str(record['singular']).lower()}",
                 f"reflect partner: {record['reflect_partner']}"]
        lines += [f"{k}: {str(v).lower()}" for k, v in record["symmetry"].items()]
        emit(cfg, "\n".join(lines))
    return EXIT_OK


def cmd_count(args, cfg: RunConfig) -> int:
    s = resolve_steps(args.steps)
    n = cfg.length if args.n is None else args.n
    if n < 0:
        raise ValueError("-n must be nonnegative")
    if args.slice == "totals":
        seq = count_totals(s, n)
        if cfg.fmt == "json":
            emit(cfg, json.dumps({"steps": str(s), "totals": seq}))
        elif cfg.fmt == "csv":
            emit(cfg, sequence_csv(seq))
        else:
            emit(cfg, ",".join(map(str, seq)))
        return EXIT_OK
    w = count_walks(s, n)
    if args.slice == "complete" and cfg.fmt in ("json", "csv"):
        if cfg.fmt == "json":
            emit(cfg, w.to_jsonl())
        else:
            rows = ["n,i,j,count"] + [f"{m},{i},{j},{c}" for m, layer in enumerate(w.counts)
                                      for (i, j), c in sorted(layer.items())]
            emit(cfg, "\n".join(rows))
        return EXIT_OK
    series = walk_slice(w, args.slice)
    if cfg.fmt == "json":
        emit(cfg, series.to_json())
    elif cfg.fmt == "csv":
        rows = ["n,i,j,count"] + [f"{m},{i},{j},{c}" for m, coeff in series.items()
                                  for (i, j), c in sorted(coeff.terms.items())]
        emit(cfg, "\n".join(rows))
    else:
        emit(cfg, repr(series))
    return EXIT_OK


def cmd_group(args, cfg: RunConfig) -> int:
    s = resolve_steps(args.steps)
    if not group.has_generators(s):
        raise ValueError(f"{s} has no group: it needs steps on both sides of each axis")
    tx, ty = group.generators(s)
    res = group.group_order(s, cfg.group_bound, cfg.degree_bound)
    record = {"steps": str(s), "tau_x": str(tx), "tau_y": str(ty),
              "kernel_invariant": group.kernel_invariance_check(s), **res.to_dict(),
              "label": res.label()}
    if cfg.fmt == "json":
        emit(cfg, as_json(record))
    elif cfg.fmt == "csv":
        emit(cfg, "steps,tau_x,tau_y,finite,order\n"
             f'"{s}","{tx}","{ty}",{str(res.finite).lower()},{res.order or ""}')
    else:
        lines = [f"steps: {s}", f"tau_x: {tx}", f"tau_y: {ty}", f"group: {res.label()}",
                 f"degree growth: {res.degree_growth}"]
        emit(cfg, "\n".join(lines))
    return EXIT_OK


def _verify_one(args) -> dict:
    k, order = args
    return closedforms.verify_class(k, order)


def cmd_verify(args, cfg: RunConfig) -> int:
    target = args.target.strip().lower()
    if target == "all":
        classes = list(range(1, 12))
    elif target.isdigit() and 1 <= int(target) <= 11:
        classes = [int(target)]
    else:
        raise ValueError(f"verify expects a class number 1..11 or 'all', got {args.target!r}")
    tasks = [(k, cfg.order) for k in classes]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_verify_one, tasks))
    else:
        reports = []
        for t in tasks:
            progress(f"verifying class {t[0]}")
            reports.append(_verify_one(t))
    ok = all(closedforms.report_passed(r) for r in reports)
    criteria = []
    if target == "all":
        criteria = acceptance.run_all(progress)
        ok &= all(c.passed for c in criteria)
    if cfg.fmt == "json":
        body = reports[0] if len(reports) == 1 and not criteria else \
            {"classes": reports, "acceptance": [c.to_dict() for c in criteria]}
        emit(cfg, as_json(body))
    elif cfg.fmt == "csv":
        rows = ["class,check,order_tested,pass"]
        rows += [f"{r['class']},{c['name']},{c['order_tested']},{str(c['pass']).lower()}"
                 for r in reports for c in r["checks"]]
        rows += [f"acceptance,criterion {c.number},,{str(c.passed).lower()}" for c in criteria]
        emit(cfg, "\n".join(rows))
    else:
        lines = []
        for r in reports:
            for c in r["checks"]:
                status = "pass" if c["pass"] else "FAIL"
                extra = ""
                if c["first_mismatch"]:
                    mm = c["first_mismatch"]
                    extra = f"  first mismatch t^{mm['n']} x^{mm['i']} y^{mm['j']}"
                lines.append(f"class {r['class']:2d}  {status:4s}  {c['name']}{extra}")
        for c in criteria:
            lines.append(c.line())
            lines += [f"    {d}" for d in c.details]
        emit(cfg, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_guess(args, cfg: RunConfig) -> int:
    s = resolve_steps(args.steps)
    progress(f"counting {cfg.terms} terms for {s}")
    seq = count_totals(s, cfg.terms - 1)
    rep = guess.guess_p_recurrence(seq, cfg.guess_order, cfg.guess_degree, cfg.guard,
                                   sequence_id=str(s))
    if cfg.fmt == "json":
        emit(cfg, as_json(rep.to_dict()))
    elif cfg.fmt == "csv":
        rec = rep.recurrence
        emit(cfg, "steps,outcome,order,degree,recurrence\n"
             f'"{s}",{rep.outcome},{rec.order if rec else ""},{rec.degree if rec else ""},'
             f'"{rec.text() if rec else ""}"')
    else:
        if rep.found:
            emit(cfg, f"{s}: Found\n{rep.recurrence.text()}")
        else:
            emit(cfg, f"{s}: NotFound within order {rep.max_order}, degree {rep.max_degree} "
                      f"({rep.terms} terms, guard {rep.guard})")
    return EXIT_OK


def cmd_survey(args, cfg: RunConfig) -> int:
    sweep = enumerate_all_classes()
    summary = sweep.summary()
    progress("computing groups of the 56 triples")
    rows = group.finite_group_survey(cfg.group_bound, cfg.degree_bound)
    progress("guessing recurrences for the 11 classes")
    entries = guess.holonomy_evidence_survey(cfg.terms, cfg.guess_order, cfg.guess_degree,
                                             cfg.guard, cfg.group_bound, cfg.degree_bound,
                                             jobs=cfg.jobs, progress=progress)
    consistent = all(r.consistent is not False for r in rows) and all(e.consistent for e in entries)
    if cfg.fmt == "json":
        body = {"summary": summary, "triples": [r.to_dict() for r in sweep.records],
                "groups": [{"steps": str(r.stepset), "singular": r.singular,
                            "group": None if r.result is None else r.result.label(),
                            "predicates": r.predicates, "consistent": r.consistent}
                           for r in rows],
                "holonomy": [e.to_dict() for e in entries], "consistent": consistent}
        emit(cfg, as_json(body))
    elif cfg.fmt == "csv":
        emit(cfg, group.survey_csv(rows) + "\n" + guess.survey_csv(entries))
    else:
        lines = [f"{k}: {v}" for k, v in summary.items()]
        lines.append("")
        for e in entries:
            lines.append(f"class {e.cls:2d} {e.steps:10s} group: {e.group_label:40s} "
                         f"guess: {e.report.outcome:8s} consistent: {str(e.consistent).lower()}")
        bad = [str(r.stepset) for r in rows if r.consistent is False]
        lines.append("")
        lines.append(f"conjecture table consistent: {str(consistent).lower()}"
                     + (f" (inconsistent: {', '.join(bad)})" if bad else ""))
        emit(cfg, "\n".join(lines))
    return EXIT_OK if consistent else EXIT_FAIL


# -- argument handling --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help="truncation order for verify (default: per-check orders)")
    common.add_argument("--length", type=int, default=30, help="walk length for count (default 30)")
    common.add_argument("--group-bound", type=int, default=group.DEFAULT_ELEMENT_BOUND)
    common.add_argument("--degree-bound", type=int, default=group.DEFAULT_DEGREE_BOUND)
    common.add_argument("--guess-order", type=int, default=guess.DEFAULT_ORDER)
    common.add_argument("--guess-degree", type=int, default=guess.DEFAULT_DEGREE)
    common.add_argument("--terms", type=int, default=guess.DEFAULT_TERMS,
                        help="number of terms handed to the guesser (default 150)")
    common.add_argument("--guard", type=int, default=guess.DEFAULT_GUARD)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", default=None, help="write the report to this file")
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="qwalk", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("classify", parents=[common], help="class of a three-step set")
    c.add_argument("steps", help="comma-separated directions, or a class number 1..11")
    c = sub.add_parser("count", parents=[common], help="count quarter-plane walks")
    c.add_argument("steps")
    c.add_argument("-n", type=int, default=None, help="maximum length (default --length)")
    c.add_argument("--slice", choices=SLICES, default="totals")
    c = sub.add_parser("group", parents=[common], help="group of the walk")
    c.add_argument("steps")
    c = sub.add_parser("verify", parents=[common], help="check closed forms for a class or all")
    c.add_argument("target", help="class number 1..11 or 'all'")
    c = sub.add_parser("guess", parents=[common], help="guess a P-recurrence for the totals")
    c.add_argument("steps")
    sub.add_parser("survey", parents=[common], help="full report over all 56 triples")
    return p


COMMANDS = {"classify": cmd_classify, "count": cmd_count, "group": cmd_group,
            "verify": cmd_verify, "guess": cmd_guess, "survey": cmd_survey}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(order=args.order, length=args.length, group_bound=args.group_bound,
                    degree_bound=args.degree_bound, guess_order=args.guess_order,
                    guess_degree=args.guess_degree, terms=args.terms, guard=args.guard,
                    fmt=args.format, out=args.out, jobs=args.jobs)
    try:
        cfg.validate()
        return COMMANDS[args.command](args, cfg)
    except (StepSetError, ValueError) as exc:
        print(f"qwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
