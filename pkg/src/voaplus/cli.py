"""Command-line interface.

Commands: analyze, shortvec, rl, decompose, orbit, odd, selftest.  The
positional SPEC is either a constructor expression (see catalog) or a path
to a JSON document with a "gram" (lattice) or "length"/"generators" (code)
field.  Exit codes: 0 ok, 2 bad input, 3 precondition violation, 4 internal
assertion failure.  VOAPLUS_RANK_BOUND overrides the isometry-search rank
bound (default 4); VOAPLUS_JIT=0 disables the compiled enumeration kernel.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import serialize
from .catalog import lattice_from_file, parse_spec
from .codes import BinaryCode
from .constrb import decompose, frame_cosets
from .errors import (InputError, InternalCheckError, ParseError,
                     PreconditionError)
from .lattice import canonicalize_coset, vectors_of_norm
from .orbit import module_orbit
from .report import analyze, odd_split
from .selftest import run_selftest


def rank_bound():
    raw = os.environ.get("VOAPLUS_RANK_BOUND")
    return int(raw) if raw else None


def load_spec(text):
    if os.path.exists(text):
        return lattice_from_file(text)
    return parse_spec(text)


def load_lattice(text):
    obj = load_spec(text)
    if isinstance(obj, BinaryCode):
        raise PreconditionError("this command needs a lattice, got a code")
    return obj


def parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational %r" % text) from exc


def parse_coset(lat, text):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != lat.rank:
        raise ParseError("coset needs %d coordinates" % lat.rank)
    vec = tuple(parse_fraction(p.strip()) for p in parts)
    return canonicalize_coset(lat, vec)


def emit(args, text_fn, json_obj):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    else:
        print(text_fn())
    return 0


def cmd_analyze(args):
    lat = load_lattice(args.spec)
    rep = analyze(lat, rank_bound())
    return emit(args, lambda: serialize.aut_report_text(rep),
                serialize.aut_report_json(rep))


def cmd_shortvec(args):
    lat = load_lattice(args.spec)
    m = parse_fraction(args.norm)
    coset = parse_coset(lat, args.coset) if args.coset else None
    vecs = vectors_of_norm(lat, coset, m)

    def text():
        lines = ["%d vectors of norm %s" % (len(vecs), m)]
        lines += ["  " + serialize.vec_text(v) for v in vecs]
        return "\n".join(lines)

    obj = {
        "schema_version": serialize.SCHEMA_VERSION,
        "kind": "short_vectors",
        "norm": serialize.frac_str(m),
        "coset": serialize.coset_json(coset) if coset else None,
        "count": len(vecs),
        "vectors": [serialize.vec_json(v) for v in vecs],
    }
    return emit(args, text, obj)


def cmd_rl(args):
    lat = load_lattice(args.spec)
    fc = frame_cosets(lat)

    def text():
        lines = ["bound 2n + |roots| = %d; %d qualifying cosets"
                 % (fc.bound, len(fc.cosets))]
        lines += ["  %s  count %d" % (serialize.vec_text(c.rep), n)
                  for c, n in zip(fc.cosets, fc.counts)]
        return "\n".join(lines)

    obj = {"schema_version": serialize.SCHEMA_VERSION,
           "kind": "frame_cosets"}
    obj.update(serialize.frame_cosets_json(fc))
    return emit(args, text, obj)


def cmd_decompose(args):
    lat = load_lattice(args.spec)
    decs = decompose(lat)

    def text():
        if not decs:
            return "not a Construction-B lattice (no qualifying coset)"
        lines = []
        for d in decs:
            lines.append("coset %s" % serialize.vec_text(d.coset.rep))
            for e in d.frame:
                lines.append("  frame %s" % serialize.vec_text(e))
            lines.append("  code [%d,%d] generators %s"
                         % (d.code.length, d.code.dimension,
                            " ".join(d.code.basis_strings()) or "-"))
            lines.append("  signs %s"
                         % "".join("+" if s > 0 else "-" for s in d.signs))
        return "\n".join(lines)

    obj = {"schema_version": serialize.SCHEMA_VERSION,
           "kind": "decompositions",
           "items": [serialize.decomposition_json(d) for d in decs]}
    return emit(args, text, obj)


def cmd_orbit(args):
    lat = load_lattice(args.spec)
    orbit = module_orbit(lat)

    def text():
        lines = ["orbit size %d" % orbit.size]
        lines += ["  " + c.label() for c in orbit.classes]
        return "\n".join(lines)

    obj = {"schema_version": serialize.SCHEMA_VERSION, "kind": "orbit"}
    obj.update(serialize.orbit_json(orbit))
    return emit(args, text, obj)


def cmd_odd(args):
    lat = load_lattice(args.spec)
    rep = odd_split(lat, rank_bound())
    return emit(args, lambda: serialize.odd_report_text(rep),
                serialize.odd_report_json(rep))


def cmd_selftest(args):
    checks = run_selftest(rank_bound())
    failed = [c for c in checks if not c.ok]

    def text():
        lines = []
        for c in checks:
            lines.append("[%s] %s%s" % ("ok" if c.ok else "FAIL", c.name,
                                        "" if c.ok else ": " + c.detail))
        lines.append("%d checks, %d failed" % (len(checks), len(failed)))
        return "\n".join(lines)

    obj = {"schema_version": serialize.SCHEMA_VERSION,
           "kind": "selftest",
           "passed": len(checks) - len(failed),
           "failed": len(failed),
           "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                      for c in checks]}
    emit(args, text, obj)
    return 0 if not failed else 4


def build_parser():
    ap = argparse.ArgumentParser(
        prog="voaplus",
        description="combinatorial invariants of even lattices and the "
                    "automorphism groups they determine")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, spec=True):
        p = sub.add_parser(name, help=help_text)
        if spec:
            p.add_argument("spec", help="constructor expression or JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("analyze", cmd_analyze, "full report on an even lattice")
    p = add("shortvec", cmd_shortvec, "vectors of a given norm in a coset")
    p.add_argument("--norm", required=True, help="target norm, e.g. 2 or 5/4")
    p.add_argument("--coset", help="dual-vector coordinates, e.g. 1/2,0")
    add("rl", cmd_rl, "cosets whose norm-2 count meets the frame bound")
    add("decompose", cmd_decompose, "frame + code decompositions")
    add("orbit", cmd_orbit, "orbit of the distinguished module class")
    add("odd", cmd_odd, "split an odd lattice over its even part")
    add("selftest", cmd_selftest, "run the data-driven acceptance checks",
        spec=False)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print("precondition violated: %s" % exc, file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print("internal check failed: %s" % exc, file=sys.stderr)
        return 4
    except json.JSONDecodeError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
