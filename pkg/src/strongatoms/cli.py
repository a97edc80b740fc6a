"""Command-line interface.

Subcommands: atoms | factor | lengths | absirred | classify | verify.
Human-readable tables by default; ``--machine`` switches to JSON with sorted
keys, which is the stability contract (timing is shown only in human mode so
machine reports are byte-identical across runs).

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import krull, zsm
from .abgroup import DEFAULT_NODE_BUDGET
from .errors import BudgetExceeded, NotZeroSum
from .krull import SearchBounds
from .specfile import SpecFileError, load_spec, spec_to_dict
from .verify import run_bundled_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

REPORT_VERSION = 1


def _display(seq: zsm.Sequence, labels) -> str:
    parts = []
    for i, e in enumerate(seq.exponents):
        if e == 1:
            parts.append(labels[i])
        elif e > 1:
            parts.append(f"{labels[i]}^{e}")
    return " ".join(parts) if parts else "1"


def _seq_dict(seq: zsm.Sequence, labels) -> dict:
    return {
        "exponents": list(seq.exponents),
        "length": len(seq),
        "support": [labels[i] for i in seq.support_indices()],
        "display": _display(seq, labels),
    }


def parse_sequence(text: str, class_set: zsm.ClassSet, labels) -> zsm.Sequence:
    """Either a comma-separated exponent vector, or a multiset of labels
    (each optionally carrying ^k)."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise SpecFileError("empty sequence")
    if len(tokens) == len(class_set) and all(_is_int(t) for t in tokens):
        return class_set.sequence([int(t) for t in tokens])
    exps = [0] * len(class_set)
    index = {lab: i for i, lab in enumerate(labels)}
    for tok in tokens:
        name, _, power = tok.partition("^")
        k = 1
        if power:
            if not _is_int(power) or int(power) < 1:
                raise SpecFileError(f"bad multiplicity in token {tok!r}")
            k = int(power)
        if name not in index:
            raise SpecFileError(f"unknown class label {name!r}")
        exps[index[name]] += k
    return class_set.sequence(exps)


def _is_int(s: str) -> bool:
    try:
        int(s)
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# subcommand payloads


def _atoms_payload(spec, labels, budget):
    atoms = zsm.enumerate_atoms(spec.class_set, budget=budget)
    rows = []
    for a in atoms:
        entry = _seq_dict(a, labels)
        entry["absolutely_irreducible"] = krull.is_absirred_support(a, atoms)
        rows.append(entry)
    return {"atoms": rows, "count": len(rows),
            "certificate": dict(atoms.certificate)}


def _factor_payload(spec, labels, seq, budget):
    atoms = zsm.enumerate_atoms(spec.class_set, budget=budget)
    facs = zsm.factorizations(seq, atoms, budget=budget)
    lengths = sorted({len(f) for f in facs})
    payload = {
        "sequence": _seq_dict(seq, labels),
        "factorizations": [
            {"atom_indices": list(f.atom_indices),
             "display": " * ".join(f"({_display(atoms[i], labels)})"
                                   for i in f.atom_indices) or "1"}
            for f in facs
        ],
        "count": len(facs),
        "lengths": lengths,
    }
    if facs:
        payload["elasticity"] = str(Fraction(max(lengths), min(lengths)) if lengths != [0] else Fraction(1))
    return payload


def _lengths_payload(spec, labels, seq, budget):
    payload = _factor_payload(spec, labels, seq, budget)
    return {"sequence": payload["sequence"], "lengths": payload["lengths"],
            "elasticity": payload.get("elasticity")}


def _absirred_payload(spec, labels, seq, budget, nmax):
    atoms = zsm.enumerate_atoms(spec.class_set, budget=budget)

    def verdict(a):
        entry = _seq_dict(a, labels)
        entry["support_criterion"] = krull.is_absirred_support(a, atoms)
        entry["kernel_criterion"] = krull.is_absirred_kernel(
            spec.group, a.support(), budget=budget)
        w = krull.witness_non_absirred(a, atoms, budget=budget)
        if w is None:
            entry["witness"] = None
        else:
            entry["witness"] = {
                "n": w.n,
                "standard": list(w.standard.atom_indices),
                "different": list(w.different.atom_indices),
            }
        if nmax is not None:
            entry["brute_force_up_to_nmax"] = krull.brute_force_absirred(
                a, atoms, nmax, budget=budget)
        return entry

    if seq is not None:
        if not atoms.contains(seq):
            raise SpecFileError(f"sequence {seq.exponents} is not an atom")
        return {"atoms": [verdict(atoms[atoms.index(seq)])]}
    return {"atoms": [verdict(a) for a in atoms]}


def _witness_dict(w, labels):
    if w is None:
        return None
    if isinstance(w, krull.PowerWitness):
        return {
            "kind": "power-factorization",
            "atom": list(w.atom.exponents),
            "n": w.n,
            "standard": list(w.standard.atom_indices),
            "different": list(w.different.atom_indices),
        }
    return {
        "kind": "repeated-class",
        "atom": list(w.atom.exponents),
        "class": labels[w.class_index],
        "symbol_classes": [labels[i] for i in w.symbol_classes],
        "a": list(w.a_exponents),
        "b": list(w.b_exponents),
        "n": w.n,
        "b_power_standard": [list(v) for v in w.b_power_standard],
        "b_power_different": [list(v) for v in w.b_power_different],
    }


def _classify_payload(spec, labels, bounds):
    rep = krull.classify_scenario(spec, bounds)
    return {
        "row_label": rep.row_label,
        "columns": ["non_absolutely_irreducible_exists",
                    "absolutely_irreducible_nonprime_exists",
                    "prime_exists"],
        "has_prime": rep.has_prime,
        "has_absirred_nonprime": rep.has_absirred_nonprime,
        "has_nonabsirred": rep.has_nonabsirred,
        "absirred_nonprime_search": {
            "found": rep.absirred_search.found,
            "witness_classes": (None if rep.absirred_search.witness is None
                                else [labels[i] for i in rep.absirred_search.witness]),
            "exhaustive": rep.absirred_search.exhaustive,
            "support_bound": rep.absirred_search.support_bound,
            "per_class_divisor_cap": list(rep.absirred_search.per_class_cap),
            "family_semantics": rep.absirred_search.family_semantics,
        },
        "nonabsirred_witness": _witness_dict(rep.nonabsirred_witness, labels),
        "bounds": {"support_bound": bounds.support_bound,
                   "nmax": bounds.nmax, "budget": bounds.budget},
    }


def _verify_payload():
    checks = run_bundled_suite()
    return {
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        "passed": sum(c.ok for c in checks),
        "failed": sum(not c.ok for c in checks),
    }, all(c.ok for c in checks)


# ---------------------------------------------------------------------------
# output


def _emit(report: dict, machine: bool, elapsed: float):
    if machine:
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    print(f"command: {report['command']}")
    results = report["results"]
    cmd = report["command"]
    if cmd == "atoms":
        print(f"{results['count']} atoms")
        for i, a in enumerate(results["atoms"]):
            mark = "absolutely irreducible" if a["absolutely_irreducible"] else "NOT absolutely irreducible"
            print(f"  [{i}] {a['display']:<30} length {a['length']:<3} {mark}")
    elif cmd in ("factor", "lengths"):
        if "factorizations" in results:
            print(f"{results['count']} factorizations of {results['sequence']['display']}")
            for f in results["factorizations"]:
                print(f"  {f['display']}")
        print(f"lengths: {results['lengths']}  elasticity: {results.get('elasticity')}")
    elif cmd == "absirred":
        for a in results["atoms"]:
            ok = a["support_criterion"]
            print(f"  {a['display']:<30} absolutely irreducible: {ok}")
            if a["witness"]:
                print(f"      witness: n={a['witness']['n']} "
                      f"indices {a['witness']['different']}")
    elif cmd == "classify":
        print(f"row {results['row_label']}  "
              f"(non-absirred, absirred-nonprime, prime)")
        search = results["absirred_nonprime_search"]
        print(f"  prime element: {results['has_prime']}")
        print(f"  absirred nonprime: {results['has_absirred_nonprime']} "
              f"(witness {search['witness_classes']}, exhaustive {search['exhaustive']})")
        print(f"  non-absirred: {results['has_nonabsirred']}")
    elif cmd == "verify":
        for c in results["checks"]:
            print(f"  {'PASS' if c['ok'] else 'FAIL'} {c['name']}: {c['detail']}")
        print(f"{results['passed']} passed, {results['failed']} failed")
    print(f"elapsed: {elapsed:.3f}s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongatoms",
        description="irreducibles, primes, and absolutely irreducible elements "
                    "of explicitly presented monoids")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_spec=True):
        if needs_spec:
            p.add_argument("--spec", required=True, help="path to a JSON spec file")
        p.add_argument("--machine", action="store_true",
                       help="machine-readable JSON report (stable schema)")
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help="search node budget")
        p.add_argument("--parallel", action="store_true",
                       help="accepted for compatibility; searches run sequentially")

    p_atoms = sub.add_parser("atoms", help="enumerate atoms with verdicts")
    common(p_atoms)

    p_factor = sub.add_parser("factor", help="all factorizations of a sequence")
    common(p_factor)
    p_factor.add_argument("--sequence", required=True,
                          help="exponent vector '1,0,2' or labels 'e1,e2,-f' / 'g^3'")

    p_len = sub.add_parser("lengths", help="length set and elasticity")
    common(p_len)
    p_len.add_argument("--sequence", required=True)

    p_abs = sub.add_parser("absirred", help="absolute-irreducibility verdicts")
    common(p_abs)
    p_abs.add_argument("--sequence", help="restrict to one atom")
    p_abs.add_argument("--nmax", type=int,
                       help="also run the brute-force power check up to n")

    p_cls = sub.add_parser("classify", help="existence scenario row")
    common(p_cls)
    p_cls.add_argument("--bound", type=int, default=4,
                       help="support-size bound for the absirred-nonprime search")
    p_cls.add_argument("--nmax", type=int, default=4)

    p_ver = sub.add_parser("verify", help="run the bundled example suite")
    common(p_ver, needs_spec=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    report: dict = {"command": args.command, "report_version": REPORT_VERSION}
    try:
        if args.command == "verify":
            report["inputs"] = {}
            results, ok = _verify_payload()
            report["results"] = results
            report["status"] = "ok" if ok else "mismatch"
            _emit(report, args.machine, time.perf_counter() - t0)
            return EXIT_OK if ok else EXIT_MISMATCH

        spec, labels = load_spec(args.spec)
        report["inputs"] = {"spec": spec_to_dict(spec, labels)}
        if args.command == "atoms":
            report["inputs"]["options"] = {"budget": args.budget}
            report["results"] = _atoms_payload(spec, labels, args.budget)
        elif args.command in ("factor", "lengths"):
            seq = parse_sequence(args.sequence, spec.class_set, labels)
            report["inputs"]["options"] = {"budget": args.budget,
                                           "sequence": list(seq.exponents)}
            fn = _factor_payload if args.command == "factor" else _lengths_payload
            report["results"] = fn(spec, labels, seq, args.budget)
        elif args.command == "absirred":
            seq = (parse_sequence(args.sequence, spec.class_set, labels)
                   if args.sequence else None)
            report["inputs"]["options"] = {"budget": args.budget, "nmax": args.nmax}
            report["results"] = _absirred_payload(spec, labels, seq, args.budget, args.nmax)
        elif args.command == "classify":
            bounds = SearchBounds(support_bound=args.bound, nmax=args.nmax,
                                  budget=args.budget)
            report["inputs"]["options"] = {"support_bound": args.bound,
                                           "nmax": args.nmax, "budget": args.budget}
            report["results"] = _classify_payload(spec, labels, bounds)
        report["status"] = "ok"
    except (SpecFileError, NotZeroSum, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(report, args.machine, time.perf_counter() - t0)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
