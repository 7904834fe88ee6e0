"""Command-line front end.

Exit status: 0 success, 1 a verification check failed, 2 unparsable input,
3 a precondition does not hold.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import braided, corpus, loewy, modth, oracle
from .algcore import Algebra, check_algebra
from .errors import (
    AxiomError,
    Inconclusive,
    LoewyError,
    NotInvariant,
    NotSemisimple,
    PreconditionError,
    SchemaError,
    UnsupportedCharacteristic,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3
COMMANDS = ("diagram", "series", "induce", "verify", "oracle", "examples")


class InvariantError(SchemaError):
    """Loaded data parses but violates an algebraic axiom."""


@dataclass
class JobSpec:
    command: str
    gen: str | None = None
    inputs: list = field(default_factory=list)
    module: str = "regular"
    kind: str = "socle"
    fmt: str = "ascii"
    seed: int = 0
    out: str | None = None
    max_dim: int | None = None
    samples: int = 12


# -- input loading ------------------------------------------------------------------

def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load_bundle(data, where: str = "<input>") -> corpus.Instance:
    """An instance from JSON: an algebra or a Hopf algebra, optional object, modules.

    Schema: {"algebra": ALG} or {"hopf": HOPF, "object": OBJ?}, plus
    {"modules": {name: MODULE}} where each module's "algebra" may be the
    string "ref" to mean the enclosing algebra.
    """
    if not isinstance(data, dict):
        raise SchemaError(f"{where}: top level must be an object")
    h = obj = None
    if "hopf" in data:
        h = braided.HopfAlgebra.from_json(data["hopf"])
        problems = braided.check_hopf(h)
        if problems:
            raise InvariantError(f"{where}: hopf algebra invariant violated: " + "; ".join(problems))
        alg = h.algebra
    elif "algebra" in data:
        alg = Algebra.from_json(data["algebra"])
        problems = check_algebra(alg)
        if problems:
            raise InvariantError(f"{where}: algebra invariant violated: " + "; ".join(problems))
    elif "sc" in data:
        return load_bundle({"algebra": data}, where)
    else:
        raise SchemaError(f"{where}: expected an 'algebra' or 'hopf' key")
    mods = {}
    for name, mdata in (data.get("modules") or {}).items():
        if not isinstance(mdata, dict):
            raise SchemaError(f"{where}: module {name!r} must be an object")
        m = modth.ModuleRep.from_json(mdata, alg=alg)
        m.name = name
        problems = modth.check_module(m)
        if problems:
            raise InvariantError(f"{where}: module {name!r} invariant violated: " + "; ".join(problems[:5]))
        mods[name] = m
    if "regular" not in mods:
        from .algcore import regular_module

        mods["regular"] = regular_module(alg)
    if "object" in data:
        if h is None:
            raise SchemaError(f"{where}: an algebra object needs a 'hopf' entry")
        obj = braided.AlgebraObject.from_json(data["object"], h)
        problems = [p for p in braided.check_algebra_object(h, obj) if not p.startswith("commutativity")]
        if problems:
            raise InvariantError(f"{where}: algebra object invariant violated: " + "; ".join(problems))
    return corpus.Instance(data.get("name", where), alg, mods, h, obj)


def parse_inputs(paths) -> corpus.Instance:
    if len(paths) != 1:
        raise SchemaError("exactly one input file is supported per job")
    return load_bundle(_read_json(paths[0]), where=paths[0])


def _instance(job: JobSpec) -> corpus.Instance:
    if job.gen and job.inputs:
        raise SchemaError("use either --gen or input files, not both")
    if job.gen:
        return corpus.build(job.gen)
    if job.inputs:
        return parse_inputs(job.inputs)
    raise SchemaError("no input: give --gen NAME:PARAMS or a JSON file")


# -- commands -------------------------------------------------------------------------

def _to_plain(x):
    if isinstance(x, dict):
        return {str(k): _to_plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_to_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _to_plain(x.tolist())
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    return x


def _dumps(obj) -> str:
    return json.dumps(_to_plain(obj), sort_keys=True, indent=2) + "\n"


def _cmd_diagram(job, inst):
    m = inst.module(job.module)
    return loewy.emit(loewy.loewy_diagram(m, job.kind), job.fmt), EXIT_OK


def _cmd_series(job, inst):
    m = inst.module(job.module)
    filt = modth.series(m, job.kind)
    if job.fmt == "json":
        return _dumps({"module": job.module, **filt.to_json(), "dims": [c.shape[0] for c in filt.chain]}), EXIT_OK
    lines = [f"{job.kind} series of {job.module} (dim {m.dim}), length {filt.length}"]
    for k, c in enumerate(filt.chain):
        lines.append(f"  F_{k}: dim {c.shape[0]}")
    return "\n".join(lines) + "\n", EXIT_OK


def _need_hopf(inst):
    if inst.hopf is None or inst.obj is None:
        raise PreconditionError(f"{inst.name} has no Hopf algebra / algebra object layer")
    return inst.hopf, inst.obj


def _cmd_induce(job, inst):
    h, a = _need_hopf(inst)
    m = inst.module(job.module)
    fm = braided.induce(h, a, m)
    d = loewy.loewy_diagram(fm, job.kind)
    if job.fmt == "json":
        return _dumps({"module": fm.to_json(), "diagram": loewy.to_json(d)}), EXIT_OK
    return loewy.emit(d, job.fmt), EXIT_OK


def _cmd_verify(job, inst):
    h, a = _need_hopf(inst)
    h.require_r()
    m = inst.module(job.module)
    rng = np.random.default_rng(job.seed)
    hyp = braided.verify_hypotheses(h, a)
    report = {"instance": inst.name, "module": job.module, "seed": job.seed, "hypotheses": hyp}
    ok = hyp["pass"] and hyp["commutative"]["pass"]
    if hyp["pass"]:
        pres = braided.verify_preservation(h, a, m, "both", rng=rng, samples=job.samples, hypotheses=hyp)
        report["preservation"] = pres
        ok = ok and pres["pass"]
    report["pass"] = ok
    return _dumps(report), EXIT_OK if ok else EXIT_FAIL


def _cmd_oracle(job, inst):
    cap = oracle.max_oracle_dim()
    max_dim = cap if job.max_dim is None else job.max_dim
    if max_dim > cap:
        raise PreconditionError(f"--max-dim {max_dim} exceeds LOEWY_MAX_ORACLE_DIM={cap}")
    alg = inst.algebra
    labels = [alg.catalog.add(s) for s in modth.simple_modules(alg)]
    rows, agree, total = [], 0, 0
    for d in range(1, max_dim + 1):
        for m in oracle.modules_up_to_iso(alg, d):
            for n in loewy.length_two_subquotients(m):
                for s in labels:
                    for t in labels:
                        fast = loewy.non_split_ext_exists(n, s, t)
                        slow = oracle.ext_exists(n, s.module, t.module)
                        total += 1
                        agree += fast == slow
                        if fast != slow:
                            rows.append({"module_dim": d, "upper": s.name, "lower": t.name,
                                         "detector": fast, "oracle": slow})
    report = {"instance": inst.name, "max_dim": max_dim, "comparisons": total, "agree": agree,
              "disagreements": rows, "pass": agree == total}
    return _dumps(report), EXIT_OK if agree == total else EXIT_FAIL


def _cmd_examples(job, inst=None):
    lines = [f"generators (version {corpus.GENERATOR_VERSION}):"]
    for name, (_, keys) in sorted(corpus._GENERATORS.items()):
        lines.append(f"  {name}:" + ",".join(f"{k}=<int>" for k in keys))
    lines += [
        "examples:",
        '  loewy diagram --gen "nilpotent:n=3,p=5" --kind radical --format ascii',
        '  loewy verify --gen "modular-currents:p=5,m=2" --module regular --seed 7',
        '  loewy oracle --gen "nilpotent:n=2,p=2" --max-dim 4',
    ]
    if job.gen:
        inst = corpus.build(job.gen)
        lines.append(f"modules of {inst.name}: " + ", ".join(sorted(inst.modules)))
    return "\n".join(lines) + "\n", EXIT_OK


_DISPATCH = {
    "diagram": _cmd_diagram,
    "series": _cmd_series,
    "induce": _cmd_induce,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
}


def run(job: JobSpec, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if job.command == "examples":
            text, code = _cmd_examples(job)
        else:
            inst = _instance(job)
            text, code = _DISPATCH[job.command](job, inst)
    except InvariantError as exc:
        print(f"invariant error: {exc}", file=stderr)
        return EXIT_PARSE
    except SchemaError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except (PreconditionError, UnsupportedCharacteristic, NotInvariant, NotSemisimple, AxiomError) as exc:
        print(f"precondition error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=stderr)
        return EXIT_FAIL
    except LoewyError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    if job.out:
        with open(job.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="loewy", description="Loewy diagrams and induction checks")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("inputs", nargs="*", help="JSON bundle file")
    ap.add_argument("--gen", help="named generator, e.g. nilpotent:n=3,p=5")
    ap.add_argument("--module", default="regular")
    ap.add_argument("--kind", choices=loewy.KINDS, default="socle")
    ap.add_argument("--format", dest="fmt", choices=("dot", "ascii", "json"), default="ascii")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    ap.add_argument("--max-dim", type=int)
    ap.add_argument("--samples", type=int, default=12, help="submodule inclusions sampled by verify")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        print("parse error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_PARSE
    job = JobSpec(args.command, args.gen, args.inputs, args.module, args.kind, args.fmt,
                  args.seed, args.out, args.max_dim, args.samples)
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
