"""Command line front end.

Exit codes: 0 success, 1 verification or oracle failure, 2 usage error.

The family interchange format is JSON with the shape

    {"n": 13, "members": ["3,2^5", ...], "witnesses": {"3,2^5": 1, ...}}

as emitted by `construct --json` and consumed by `verify`.  Class list
files (for `oracle --classes-file`) hold one partition per line in the
compact text form, e.g. `3,2^2`.
"""

from __future__ import annotations

import argparse
import json
import math
import multiprocessing
import sys

from .acceptance import run as run_acceptance
from .bounds import bound_report
from .constructions import (
    ConstructionError,
    build_x_family,
    family_from_members,
    lemma_partition,
    verify_lemma,
    verify_mig_lower_bound,
    verify_x_family,
)
from .family_search import (
    SearchError,
    max_family,
    max_family_intransitive_imprimitive,
)
from .partitions import Partition, PartitionError
from .subgroup_oracle import (
    MAX_DEGREE,
    MIN_DEGREE,
    OracleError,
    class_meets_subgroup,
    invariably_generates,
    is_mig_set,
    maximal_subgroups,
)

USAGE_ERROR = 2


def _family_payload(xf):
    return {
        "n": xf.n,
        "members": [p.text() for p in xf.members],
        "witnesses": {p.text(): xf.witnesses[p] for p in xf.members},
        "repair_case": xf.repair_case,
    }


def _print_checks(cert):
    for name, check in cert["checks"].items():
        mark = "ok" if check["pass"] else "FAIL"
        print(f"  {name}: {mark} ({check['detail']})")


def _cmd_lemma(args):
    try:
        info = verify_lemma(lemma_partition(args.i, args.n))
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        print(json.dumps(info))
    else:
        print(f"partition {info['partition']} of {info['n']}")
        print(f"  case: {info['case']}")
        print(f"  missing partial sums: {info['missing']}")
    return 0


def _cmd_construct(args):
    try:
        xf = build_x_family(args.n)
    except (ConstructionError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = _family_payload(xf)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"family of {len(xf.members)} cycle types of S_{xf.n} ({xf.repair_case})")
        for p in xf.members:
            print(f"  {p.text()}  (witness {xf.witnesses[p]})")
        if args.output:
            print(f"written to {args.output}")
    return 0


def _load_family(path):
    with open(path) as fh:
        data = json.load(fh)
    members = [Partition.from_text(t) for t in data["members"]]
    witnesses = None
    if "witnesses" in data:
        witnesses = {Partition.from_text(t): w for t, w in data["witnesses"].items()}
        if set(witnesses) != set(members):
            raise KeyError("witness keys do not match the member list")
    return family_from_members(members, witnesses)


def _cmd_verify(args):
    try:
        xf = _load_family(args.family)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: cannot read family: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (PartitionError, ConstructionError) as exc:
        print(f"error: malformed family: {exc}", file=sys.stderr)
        return USAGE_ERROR
    cert = verify_x_family(xf, raise_on_failure=False)
    if xf.n >= 11 and args.lower_bound:
        lower = verify_mig_lower_bound(xf, raise_on_failure=False)
        cert["checks"].update(lower["checks"])
    ok = all(c["pass"] for c in cert["checks"].values())
    if args.json:
        print(json.dumps({**cert, "pass": ok}))
    else:
        print(f"family of {len(xf.members)} members at n={xf.n}:")
        _print_checks(cert)
        print("verdict:", "valid" if ok else "INVALID")
    return 0 if ok else 1


def _cmd_search(args):
    try:
        if args.descriptors:
            r = max_family_intransitive_imprimitive(args.n)
        else:
            r = max_family(args.n, known_lower_bound=args.seed)
    except (SearchError, PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    payload = {
        "n": r.n,
        "t_max": r.t_max,
        "family": [p.text() for p in r.optimal_family],
        "witnesses": {p.text(): w for p, w in r.witness_assignment.items()},
        "nodes_explored": r.nodes_explored,
        "exhaustive": r.exhaustive,
    }
    if r.descriptors:
        payload["descriptors"] = [list(d) for d in r.descriptors]
    if args.json:
        print(json.dumps(payload))
        return 0
    kind = "subgroup descriptors" if args.descriptors else "missing partial sums"
    print(f"n={r.n}: largest family size {r.t_max} (witnesses by {kind})")
    for p in r.optimal_family:
        w = r.witness_assignment[p]
        label = " ".join(str(x) for x in r.descriptors[w]) if r.descriptors else w
        print(f"  {p.text()}  (witness {label})")
    print(f"nodes explored: {r.nodes_explored}")
    return 0


def _bounds_row(n):
    r = bound_report(n)
    hits = ",".join(f"{label}:{k}" for label, k in r.as_dict()["table1_hits"]) or "-"
    return r, hits


def _cmd_bounds(args):
    lo = args.lo
    hi = args.hi if args.hi is not None else lo
    if lo < 5 or hi < lo:
        print("error: need 5 <= FROM <= TO", file=sys.stderr)
        return USAGE_ERROR
    degrees = range(lo, hi + 1)
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_bounds_row, degrees)
    else:
        rows = [_bounds_row(n) for n in degrees]
    if args.json:
        print(json.dumps([r.as_dict() for r, _ in rows]))
        return 0
    print("n\tdelta\ta\tb\tc\tlower\tupper\ttable1")
    for r, hits in rows:
        b = r.b_with_k1 if args.k1 else r.b
        lower = r.n / 2 - math.log2(r.n)
        print(f"{r.n}\t{r.delta}\t{r.a}\t{b}\t{r.c}\t{lower:.3f}\t{r.upper}\t{hits}")
    return 0


def _parse_classes(text, n):
    classes = []
    for token in text.replace("\n", ";").split(";"):
        token = token.strip().strip("()").strip()
        if not token:
            continue
        p = Partition.from_text(token)
        if p.n > n:
            raise PartitionError(f"class {p.text()} exceeds degree {n}")
        classes.append(Partition(p.parts + (1,) * (n - p.n)))
    if not classes:
        raise PartitionError("empty class list")
    return classes


def _removal_witnesses(classes, records):
    """For each class, a maximal subgroup meeting all the others (if any)."""
    out = {}
    for i, p in enumerate(classes):
        rest = classes[:i] + classes[i + 1 :]
        rec = next(
            (r for r in records if all(class_meets_subgroup(r, q) for q in rest)),
            None,
        )
        if rec is not None:
            out[p.text()] = rec.label
    return out


def _cmd_oracle(args):
    try:
        if args.classes_file:
            with open(args.classes_file) as fh:
                text = fh.read()
        else:
            text = args.classes
        classes = _parse_classes(text, args.n)
        records = maximal_subgroups(args.n)
        generates = invariably_generates(classes, args.n)
        minimal = is_mig_set(classes, args.n)
    except OSError as exc:
        print(f"error: cannot read class list: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (PartitionError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    blocker = None
    if not generates:
        rec = next(
            r for r in records if all(class_meets_subgroup(r, q) for q in classes)
        )
        blocker = rec.label
    removal = _removal_witnesses(classes, records) if generates else {}
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "classes": [p.text() for p in classes],
                    "invariably_generates": generates,
                    "minimal": minimal,
                    "blocked_by": blocker,
                    "removal_witnesses": removal,
                }
            )
        )
    else:
        print(f"classes of S_{args.n}: " + "; ".join(p.text() for p in classes))
        if generates:
            print("  invariably generates: yes")
        else:
            print(f"  invariably generates: no (every class meets {blocker})")
        print(f"  minimal invariable generating set: {'yes' if minimal else 'no'}")
        for text_, label in removal.items():
            print(f"    dropping {text_} leaves a set met by {label}")
        if generates and not minimal:
            redundant = [p.text() for p in classes if p.text() not in removal]
            print(f"    redundant classes: {', '.join(redundant)}")
    return 0 if minimal else 1


def _cmd_repro(args):
    numbers = None
    if args.only:
        try:
            numbers = {int(tok) for tok in args.only.split(",")}
        except ValueError:
            print(f"error: bad criterion list {args.only!r}", file=sys.stderr)
            return USAGE_ERROR
    results = run_acceptance(numbers)
    if not results:
        print(f"error: no criteria match {args.only!r}", file=sys.stderr)
        return USAGE_ERROR
    ok = all(r.acceptable for r in results)
    summary = [r.line() for r in results]
    summary.append(
        "all checks passed or failed in documented ways" if ok else "UNEXPECTED FAILURES"
    )
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("\n".join(summary) + "\n")
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "number": r.number,
                        "name": r.name,
                        "passed": r.passed,
                        "expected_failure": r.expected_failure,
                        "runtime": round(r.runtime, 2),
                        "detail": r.detail,
                    }
                    for r in results
                ]
            )
        )
    else:
        print("\n".join(summary))
    return 0 if ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="migsets",
        description="Minimal invariable generating sets of symmetric groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemma", help="build and verify one gap partition")
    p.add_argument("--i", type=int, required=True, help="forced gap (1 <= i < n/3)")
    p.add_argument("--n", type=int, required=True, help="degree")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("construct", help="build the family of cycle types at degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", metavar="FILE", help="also write the family as JSON")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="re-verify a family from a JSON file")
    p.add_argument("family", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--no-lower-bound",
        dest="lower_bound",
        action="store_false",
        help="skip the subgroup checks, test only the partial-sum properties",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for the largest family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--seed", type=int, default=0, help="known lower bound to prune with"
    )
    p.add_argument(
        "--descriptors",
        action="store_true",
        help="witness by intransitive/imprimitive subgroup descriptors instead",
    )
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bounds", help="upper-bound component table (TSV)")
    p.add_argument("--from", dest="lo", type=int, required=True, metavar="N")
    p.add_argument("--to", dest="hi", type=int, metavar="N")
    p.add_argument("--json", action="store_true")
    p.add_argument("--k1", action="store_true", help="count k=1 binomial solutions")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for sweeps")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser(
        "oracle",
        help=f"exact subgroup oracle ({MIN_DEGREE} <= n <= {MAX_DEGREE})",
    )
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--classes",
        help='semicolon-separated cycle types, e.g. "(4,1);(3,1^3);(3,3)"; '
        "short classes are padded with fixed points",
    )
    group.add_argument(
        "--classes-file", metavar="FILE", help="one partition per line"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("repro", help="run the acceptance checks")
    p.add_argument("--only", metavar="NUMBERS", help="comma-separated criteria, e.g. 1,5")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", metavar="FILE", help="also write the summary to a file")
    p.set_defaults(func=_cmd_repro)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
