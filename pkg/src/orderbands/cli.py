"""Command-line driver: analyze instance files, run fixtures, suites, and
randomized falsification.

Exit codes: 0 ok, 1 verdict-vs-expected mismatch or theorem violation,
2 input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional

from orderbands import report as reportmod
from orderbands.disjoint import band_generated, disjoint_complement, is_band
from orderbands.funcspace.examples import (
    EXAMPLE_NAMES,
    check_expected,
    example_verdicts,
    make_example,
)
from orderbands.ideals import (
    IdealDescriptor,
    RESTRICTED,
    TheoremViolation,
    USER,
    coordinate_ideal,
    is_directed,
    is_o_closed,
    is_s_closed,
    is_solid,
    is_solvex,
    theorem_suite,
)
from orderbands.instancefile import InstanceFile, ParseError, parse_instance
from orderbands.linalg import SubspaceBasis
from orderbands.polyspace import (
    NotGenerating,
    NotPointed,
    PolySpace,
    build_space,
    is_fordable,
    is_lattice_rdp,
    is_pervasive,
    order_leq,
)
from orderbands.rational import fmt, vec


def random_cone(seed: int, n: int, m: int, max_attempts: int = 800):
    """Deterministic-per-seed pointed generating cone spec with m extreme
    dual rays after canonicalization (rejection sampling)."""
    if not (2 <= n <= 6):
        raise ValueError("dimension n must be in [2, 6]")
    if not (n <= m <= 2 * n + 2):
        raise ValueError("m must be in [n, 2n+2]")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        k = rng.randint(n, m + 2)
        rays = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
        try:
            s = build_space(rays=rays, name=f"random-{seed}")
        except (NotPointed, NotGenerating):
            continue
        if s.m == m:
            return s
    raise ValueError(f"no cone with m={m} dual rays found in dimension {n} "
                     f"(seed {seed})")


def _standard_ideals(s: PolySpace, rng: random.Random) -> list[IdealDescriptor]:
    """A small family of certified ideals and bands for the suites."""
    out = [coordinate_ideal(s, frozenset(), "zero"),
           coordinate_ideal(s, frozenset(range(s.m)), "full")]
    for _ in range(2):
        size = rng.randint(1, max(1, s.m - 1))
        J = frozenset(rng.sample(range(s.m), size))
        out.append(coordinate_ideal(s, J, f"coord{sorted(J)}"))
    x = rng.choice(s.cone_rays)
    band = band_generated([x], s)
    out.append(IdealDescriptor(s, band.carrier, "principal-band", RESTRICTED, solid=True))
    return out


def run_theorem_seeds(seeds, budget_note: Optional[str] = None) -> dict:
    rows = []
    violations = []
    for seed in seeds:
        rng = random.Random(seed)
        n = rng.randint(2, 4)
        m_choices = [n] if n == 2 else [n, n + 1, n + 2]
        m = rng.choice(m_choices)
        try:
            s = random_cone(seed, n, m)
        except ValueError:
            continue
        try:
            rep = theorem_suite(s, _standard_ideals(s, rng))
            rows.append({"seed": seed, "space": s.name, "n": n, "m": s.m,
                         "violations": rep["violations"]})
        except TheoremViolation as e:
            violations.append({"seed": seed, "error": str(e)})
    return {"seeds": len(rows), "rows": rows, "violations": violations}


# ----------------------------------------------------------------- analyze

class AnalysisError(ValueError):
    pass


def _build_instance(inst: InstanceFile):
    spaces = {}
    examples = {}
    for spec in inst.spaces:
        if spec.kind == "cone_rays":
            spaces[spec.name] = build_space(rays=spec.data, name=spec.name)
        elif spec.kind == "cone_inequalities":
            spaces[spec.name] = build_space(inequalities=spec.data, name=spec.name)
        else:
            ex = make_example(spec.example)
            examples[spec.name] = ex
            spaces[spec.name] = ex.space
    subspaces = {}
    for spec in inst.subspaces:
        if spec.space not in spaces:
            raise AnalysisError(f"subspace {spec.name!r} names unknown space {spec.space!r}")
        s = spaces[spec.space]
        flags = {f: True for f in spec.flags}
        if spec.kind == "basis":
            if not isinstance(s, PolySpace):
                raise AnalysisError("basis subspaces need a polyhedral space")
            carrier = SubspaceBasis.from_vectors(spec.data, s.n)
            subspaces[spec.name] = IdealDescriptor(
                s, carrier, spec.name, USER,
                directed=flags.get("directed"), solid=flags.get("solid"))
        elif spec.kind == "kernel_coords":
            J = frozenset(range(s.m)) - frozenset(spec.coords)
            subspaces[spec.name] = coordinate_ideal(s, J, spec.name)
        else:
            ex = examples.get(spec.space)
            if ex is None or spec.fixture_ideal not in ex.ideals:
                raise AnalysisError(f"unknown fixture ideal {spec.fixture_ideal!r}")
            subspaces[spec.name] = ex.ideals[spec.fixture_ideal]
    return spaces, subspaces, examples


def _run_query(q, spaces, subspaces, examples):
    def space_of(name):
        if name in spaces:
            return spaces[name]
        if name in subspaces:
            return subspaces[name].space
        raise AnalysisError(f"query {q.name!r}: unknown target {name!r}")

    res: dict = {"op": q.op}
    if q.op in ("is_pervasive", "is_fordable", "is_lattice_rdp"):
        s = space_of(q.target)
        if not isinstance(s, PolySpace):
            from orderbands.funcspace.spaces import pervasive_func, rdp_verdict

            fn = {"is_pervasive": pervasive_func,
                  "is_fordable": pervasive_func,
                  "is_lattice_rdp": rdp_verdict}[q.op]
            res["result"] = fn(s)
        else:
            fn = {"is_pervasive": is_pervasive, "is_fordable": is_fordable,
                  "is_lattice_rdp": is_lattice_rdp}[q.op]
            res["result"] = fn(s)
    elif q.op in ("is_band", "is_solid", "is_directed", "is_solvex",
                  "is_s_closed", "is_o_closed"):
        if q.target not in subspaces:
            raise AnalysisError(f"query {q.name!r}: unknown subspace {q.target!r}")
        W = subspaces[q.target]
        s = W.space
        fn = {"is_band": lambda: is_band(W.carrier, s),
              "is_solid": lambda: is_solid(W, s),
              "is_directed": lambda: is_directed(W, s),
              "is_solvex": lambda: is_solvex(W, s),
              "is_s_closed": lambda: is_s_closed(W, s),
              "is_o_closed": lambda: is_o_closed(W.carrier, s)}[q.op]
        res["result"] = fn()
    elif q.op == "order_leq":
        s = space_of(q.target)
        x, y = (vec(a.split()) for a in q.args)
        verdict = order_leq(x, y, s)
        res["result"] = {"verdict": "yes" if verdict else "no"}
    elif q.op == "is_disjoint":
        s = space_of(q.target)
        from orderbands.disjoint import is_disjoint_cover, is_disjoint_def

        x, y = (vec(a.split()) for a in q.args)
        cover = is_disjoint_cover(x, y, s)
        defn = is_disjoint_def(x, y, s)
        if cover != defn:
            raise TheoremViolation("disjointness oracle mismatch")
        res["result"] = {"verdict": "yes" if cover else "no",
                         "routes_agree": True}
    elif q.op in ("disjoint_complement", "band_generated"):
        W = subspaces[q.target]
        fn = disjoint_complement if q.op == "disjoint_complement" else band_generated
        band = fn(W.carrier, W.space)
        res["result"] = {"support": band.support, "carrier": band.carrier}
    elif q.op == "theorem_suite":
        s = space_of(q.target)
        ideals = [w for w in subspaces.values() if w.space is s]
        res["result"] = theorem_suite(s, ideals)
    elif q.op == "example_table":
        ex = examples.get(q.target)
        if ex is None:
            raise AnalysisError(f"query {q.name!r}: target is not an example space")
        mismatches = check_expected(ex)
        res["result"] = {"verdict": "yes" if not mismatches else "no",
                         "mismatches": mismatches}
    else:
        raise AnalysisError(f"unhandled op {q.op!r}")
    return res


def _verdict_text(result) -> Optional[str]:
    if hasattr(result, "verdict"):
        return result.verdict
    if isinstance(result, dict):
        return result.get("verdict")
    return None


def analyze(path: str) -> tuple[int, dict]:
    text = Path(path).read_text()
    inst = parse_instance(text)
    spaces, subspaces, examples = _build_instance(inst)
    queries = {}
    mismatched = False
    for q in inst.queries:
        entry = _run_query(q, spaces, subspaces, examples)
        verdict = _verdict_text(entry.get("result"))
        if q.expect is not None:
            entry["expect"] = q.expect
            entry["matches_expected"] = verdict == q.expect
            mismatched |= not entry["matches_expected"]
        queries[q.name] = entry
    report = {
        "command": "analyze",
        "file": str(path),
        "spaces": sorted(spaces),
        "queries": queries,
    }
    return (1 if mismatched else 0), report


# ------------------------------------------------------------------- suite

def run_example(name: str) -> tuple[int, dict]:
    ex = make_example(name)
    computed = example_verdicts(ex)
    mismatches = check_expected(ex, computed)
    report = {
        "command": "example",
        "example": name,
        "computed": computed,
        "expected": ex.expected,
        "mismatches": mismatches,
        "notes": list(ex.notes),
    }
    return (1 if mismatches else 0), report


def run_suite(seed: int = 0, budget: int = 40) -> tuple[int, dict]:
    fixtures = {}
    bad = False
    for name in EXAMPLE_NAMES:
        code, rep = run_example(name)
        fixtures[name] = {"mismatches": rep["mismatches"]}
        bad |= code != 0
    seeds = range(seed, seed + budget)
    randomized = run_theorem_seeds(seeds)
    bad |= bool(randomized["violations"])
    report = {
        "command": "suite",
        "fixtures": fixtures,
        "randomized": randomized,
        "status": "fail" if bad else "ok",
    }
    return (1 if bad else 0), report


def run_falsify(seed: int, budget: int, fixtures_dir: Optional[str]) -> tuple[int, dict]:
    """Search randomized instances for implication violations with exactly
    one hypothesis dropped; archive near-misses as instance files.

    The probed implication is "directed band => s-closed" with the
    pervasiveness hypothesis dropped: on non-pervasive cones the s-closed
    witness search runs on band descriptors, and any exact witness found is
    a new fixture candidate rather than a build failure.
    """
    near_misses = []
    hard_violations = []
    rng = random.Random(seed)
    for _ in range(budget):
        sub_seed = rng.randint(0, 10 ** 6)
        n = rng.randint(3, 4)
        m = rng.choice([n + 1, n + 2])
        try:
            s = random_cone(sub_seed, n, m)
        except ValueError:
            continue
        ideals = _standard_ideals(s, rng)
        try:
            theorem_suite(s, ideals, strict=True)
        except TheoremViolation as e:
            hard_violations.append({"seed": sub_seed, "error": str(e)})
            continue
        if is_pervasive(s).is_yes:
            continue
        for I in ideals:
            if not is_band(I.carrier, s).is_yes:
                continue
            directed = is_directed(I, s)
            if not directed.is_yes:
                continue
            res = is_s_closed(I.with_flags(directed=True), s)
            if res.is_no:
                near_misses.append({
                    "seed": sub_seed, "n": n, "m": m, "ideal": I.name,
                    "dropped": "pervasive",
                    "implication": "directed band => s-closed",
                    "witness": res.witness,
                })
    archived = []
    if fixtures_dir and near_misses:
        out = Path(fixtures_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, miss in enumerate(near_misses):
            p = out / f"falsify-{miss['seed']}-{i}.obi"
            p.write_text(_near_miss_instance(miss))
            archived.append(str(p))
    report = {
        "command": "falsify",
        "near_misses": near_misses,
        "archived": archived,
        "violations": hard_violations,
    }
    return (1 if hard_violations else 0), report


def _near_miss_instance(miss: dict) -> str:
    from orderbands.instancefile import serialize_matrix

    sp = random_cone(miss["seed"], miss["n"], miss["m"])
    lines = [
        f"# near-miss candidate: {miss['implication']} (dropped: {miss['dropped']})",
        "[space candidate]",
        "kind = cone_rays",
        f"data = {serialize_matrix(sp.cone_rays)}",
    ]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------- cli

def main(argv: Optional[list] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="orderbands",
        description="Exact workbench for bands, order closed and supremum "
                    "closed ideals in finitely representable pre-Riesz spaces",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=40)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--fixtures", default=None, help="archive dir for falsify")
    sub = parser.add_subparsers(dest="command", required=True)
    p_analyze = sub.add_parser("analyze", help="evaluate the queries of an instance file")
    p_analyze.add_argument("file")
    p_example = sub.add_parser("example", help="run a paper fixture against its expected table")
    p_example.add_argument("name", choices=EXAMPLE_NAMES)
    sub.add_parser("suite", help="full regression: fixtures plus randomized theorem suites")
    sub.add_parser("falsify", help="randomized hypothesis-dropping search")

    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            code, report = analyze(args.file)
        elif args.command == "example":
            code, report = run_example(args.name)
        elif args.command == "suite":
            code, report = run_suite(args.seed, args.budget)
        else:
            code, report = run_falsify(args.seed, args.budget, args.fixtures)
    except (ParseError, AnalysisError, NotPointed, NotGenerating, ValueError,
            FileNotFoundError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except TheoremViolation as e:
        sys.stderr.write(f"theorem violation: {e}\n")
        return 1
    if args.format == "json":
        sys.stdout.write(reportmod.dumps(report))
    else:
        sys.stdout.write("\n".join(reportmod.text_lines(report)) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
