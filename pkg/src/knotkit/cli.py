"""Command-line surface and the scenario verification pipeline.

PDText arguments may be given inline (anything starting with ``PD[``) or as
a path to a file containing one.  All default-mode output is deterministic.

Exit codes: 0 every expectation verified, 2 something remained Unknown,
1 error or refuted expectation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import Certificate, SearchLimits, certify_unknot, prove_knotted, replay
from .codec import canonical_code, emit_pd, parse_pd
from .diagram import Diagram, connected_sum, mirror, torus_knot, validate, writhe
from .errors import KnotError
from .invariants import (
    MIRROR_JONES,
    SAME_JONES,
    bracket_fast,
    bracket_oracle,
    chiral_by_jones,
    detect_mirror_pair,
    jones,
    signature,
    unknotting_lower_bound,
)
from .unknotting import apply_changes, report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2

_SCENARIO_KEYS = {
    "name",
    "diagram",
    "changes",
    "expect",
    "pair",
    "chain",
    "limits",
    "untranscribed",
    "provenance",
}
_LIMIT_KEYS = {"max_crossings", "max_nodes", "allow_r1up"}


def _read_pd(arg: str) -> Diagram:
    text = arg
    if not arg.strip().startswith("PD["):
        text = Path(arg).read_text()
    return parse_pd(text)


def _limits_from(obj: dict | None) -> SearchLimits:
    if not obj:
        return SearchLimits()
    unknown = set(obj) - _LIMIT_KEYS
    if unknown:
        raise KnotError(f"unknown limit fields: {sorted(unknown)}")
    return SearchLimits(
        max_crossings=obj.get("max_crossings"),
        max_nodes=obj.get("max_nodes", 1_000_000),
        allow_r1up=obj.get("allow_r1up", False),
    )


# ---------------------------------------------------------------------------
# scenario pipeline
# ---------------------------------------------------------------------------

class _ScenarioRun:
    def __init__(self):
        self.lines: list[str] = []
        self.refuted = False
        self.unknown = False

    def say(self, text: str) -> None:
        self.lines.append(text)

    def exit_code(self) -> int:
        if self.refuted:
            return EXIT_ERROR
        if self.unknown:
            return EXIT_UNKNOWN
        return EXIT_OK


def _check_schema(s: dict) -> None:
    unknown = set(s) - _SCENARIO_KEYS
    if unknown:
        raise KnotError(f"unknown scenario fields: {sorted(unknown)}")
    if "name" not in s:
        raise KnotError("scenario needs a name")
    if not s.get("untranscribed") and "diagram" not in s and "pair" not in s:
        raise KnotError("scenario needs a diagram or a pair")
    if s.get("expect") not in (None, "unknot", "knotted"):
        raise KnotError(f"bad expect value {s.get('expect')!r}")
    for stage in s.get("chain") or []:
        if set(stage) - {"changes", "expect_label"}:
            raise KnotError("chain stages allow only changes/expect_label")
        if stage.get("expect_label") not in ("unknot", "knotted"):
            raise KnotError("chain stages need expect_label unknot|knotted")


def _verify_expectation(run, d: Diagram, expect: str, lim: SearchLimits,
                        cert_path: Path | None, label: str) -> None:
    """One unknot/knotted expectation with a machine-checkable witness."""
    if expect == "knotted":
        if prove_knotted(d):
            run.say(f"[{label}] verified knotted: jones(d) != 1")
            return
        cert = certify_unknot(d, lim)
        if cert is not None and replay(d, cert):
            run.refuted = True
            run.say(f"[{label}] REFUTED: expected knotted but found an unknot certificate")
        else:
            run.unknown = True
            run.say(f"[{label}] UNKNOWN: jones(d) = 1 and no certificate either way")
        return
    # expect unknot
    cert = certify_unknot(d, lim)
    if cert is not None:
        if not replay(d, cert):
            raise AssertionError("search produced a certificate that fails replay")
        where = "(not written)"
        if cert_path is not None:
            cert_path.write_text(cert.to_text())
            where = str(cert_path)
        run.say(f"[{label}] verified unknot: certificate with {len(cert.moves)} moves {where}")
    elif prove_knotted(d):
        run.refuted = True
        run.say(f"[{label}] REFUTED: expected unknot but jones(d) != 1 proves knotted")
    else:
        run.unknown = True
        run.say(f"[{label}] UNKNOWN: no certificate within limits")


def run_scenario(s: dict, out_dir: Path) -> tuple[int, str]:
    run = _ScenarioRun()
    _check_schema(s)
    name = s["name"]
    run.say(f"scenario: {name}")
    if s.get("untranscribed"):
        run.say("UNTRANSCRIBED: this scenario is a transcription placeholder; "
                "it carries no machine-readable figure data and cannot verify anything yet.")
        if s.get("provenance"):
            run.say(f"note: {s['provenance']}")
        run.unknown = True
        return run.exit_code(), "\n".join(run.lines)

    lim = _limits_from(s.get("limits"))

    if "pair" in s:
        d1 = parse_pd(s["pair"][0])
        d2 = parse_pd(s["pair"][1])
        verdict = detect_mirror_pair(d1, d2)
        c1, c2 = chiral_by_jones(d1), chiral_by_jones(d2)
        run.say(f"[pair] detect_mirror_pair = {verdict}; chiral_by_jones = {c1}, {c2}")
        if verdict == MIRROR_JONES and c1 and c2:
            run.say("[pair] verified: the diagrams are a chiral knot and its mirror "
                    "(Jones distinguishes them)")
        elif verdict == SAME_JONES:
            run.unknown = True
            run.say("[pair] UNKNOWN: equal Jones polynomials do not distinguish the pair")
        else:
            run.refuted = True
            run.say("[pair] REFUTED: Jones polynomials are unrelated, not a mirror pair")

    if "diagram" in s and s.get("changes") is not None and "expect" in s:
        d = parse_pd(s["diagram"])
        changed = apply_changes(d, s["changes"])
        run.say(f"[changes] applied {len(s['changes'])} crossing changes {s['changes']}")
        _verify_expectation(run, changed, s["expect"], lim,
                            out_dir / f"{name}.changes.cert", "changes")

    if s.get("chain"):
        d = parse_pd(s["diagram"])
        cur = d
        for idx, stage in enumerate(s["chain"]):
            cur = apply_changes(cur, stage.get("changes", []))
            run.say(f"[chain {idx}] applied changes {stage.get('changes', [])}")
            _verify_expectation(run, cur, stage["expect_label"], lim,
                                out_dir / f"{name}.chain{idx}.cert", f"chain {idx}")

    run.say({EXIT_OK: "result: VERIFIED", EXIT_ERROR: "result: REFUTED",
             EXIT_UNKNOWN: "result: UNKNOWN"}[run.exit_code()])
    return run.exit_code(), "\n".join(run.lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotkit", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("parse", help="validate a PD code and print it normalized")
    p.add_argument("pd")

    p = sub.add_parser("jones", help="Jones polynomial in t")
    p.add_argument("pd")

    p = sub.add_parser("bracket", help="Kauffman bracket in A")
    p.add_argument("pd")
    p.add_argument("--oracle", action="store_true", help="use the 2^n state sum")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("writhe", help="sum of crossing signs")
    p.add_argument("pd")

    p = sub.add_parser("signature", help="Goeritz/Gordon-Litherland signature")
    p.add_argument("pd")

    p = sub.add_parser("mirror", help="PD code of the mirror image")
    p.add_argument("pd")

    p = sub.add_parser("sum", help="connected sum of two codes")
    p.add_argument("pd1")
    p.add_argument("pd2")
    p.add_argument("--arc1", type=int, default=1)
    p.add_argument("--arc2", type=int, default=1)

    p = sub.add_parser("torus", help="closed 2-braid diagram of T(2,n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("certify", help="search for an unknot certificate")
    p.add_argument("pd")
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=1_000_000)
    p.add_argument("--allow-r1up", action="store_true")
    p.add_argument("--output", type=Path, default=None)

    p = sub.add_parser("unknotting", help="bounds on the unknotting number")
    p.add_argument("pd")
    p.add_argument("-k", type=int, required=True, help="largest change-set size to try")
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=1_000_000)

    p = sub.add_parser("chirality", help="compare two codes by Jones polynomial")
    p.add_argument("pd1")
    p.add_argument("pd2")

    p = sub.add_parser("scenario", help="run a scenario file")
    p.add_argument("file", type=Path)
    p.add_argument("--out-dir", type=Path, default=None)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except KnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def _dispatch(args) -> int:
    cmd = args.cmd
    if cmd == "parse":
        d = _read_pd(args.pd)
        validate(d)
        print(emit_pd(d))
        return EXIT_OK
    if cmd == "jones":
        print(jones(_read_pd(args.pd)).render("t"))
        return EXIT_OK
    if cmd == "bracket":
        d = _read_pd(args.pd)
        br = bracket_oracle(d, jobs=args.jobs) if args.oracle else bracket_fast(d)
        print(br.render("A"))
        return EXIT_OK
    if cmd == "writhe":
        print(writhe(_read_pd(args.pd)))
        return EXIT_OK
    if cmd == "signature":
        g = signature(_read_pd(args.pd))
        print(f"sigma = {g.sigma}")
        print(f"mu = {g.mu}")
        print(f"u >= {abs(g.sigma) // 2}")
        return EXIT_OK
    if cmd == "mirror":
        print(emit_pd(mirror(_read_pd(args.pd))))
        return EXIT_OK
    if cmd == "sum":
        print(emit_pd(connected_sum(_read_pd(args.pd1), args.arc1,
                                    _read_pd(args.pd2), args.arc2)))
        return EXIT_OK
    if cmd == "torus":
        print(emit_pd(torus_knot(args.n)))
        return EXIT_OK
    if cmd == "certify":
        d = _read_pd(args.pd)
        lim = SearchLimits(args.max_crossings, args.max_nodes, args.allow_r1up)
        cert = certify_unknot(d, lim)
        if cert is None:
            print("unknown")
            return EXIT_UNKNOWN
        if not replay(d, cert):
            raise AssertionError("certificate failed replay")
        text = cert.to_text()
        if args.output:
            args.output.write_text(text)
        sys.stdout.write(text)
        return EXIT_OK
    if cmd == "unknotting":
        d = _read_pd(args.pd)
        lim = SearchLimits(args.max_crossings, args.max_nodes)
        rep = report(d, args.k, lim)
        print(rep.render())
        return EXIT_OK if rep.upper is not None else EXIT_UNKNOWN
    if cmd == "chirality":
        d1, d2 = _read_pd(args.pd1), _read_pd(args.pd2)
        print(f"verdict: {detect_mirror_pair(d1, d2)}")
        print(f"jones(d1) = {jones(d1).render()}")
        print(f"jones(d2) = {jones(d2).render()}")
        print(f"chiral(d1) = {str(chiral_by_jones(d1)).lower()}")
        print(f"chiral(d2) = {str(chiral_by_jones(d2)).lower()}")
        return EXIT_OK
    if cmd == "scenario":
        try:
            data = json.loads(args.file.read_text())
        except json.JSONDecodeError as exc:
            raise KnotError(f"scenario file is not valid JSON: {exc}") from exc
        out_dir = args.out_dir if args.out_dir is not None else args.file.parent
        out_dir.mkdir(parents=True, exist_ok=True)
        code, text = run_scenario(data, out_dir)
        print(text)
        return code
    raise KnotError(f"unknown command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
