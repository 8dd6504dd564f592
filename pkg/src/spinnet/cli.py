"""Command-line surface.

Exit codes: 0 on success (and identities holding), 1 when a requested
verification finds a violation or a labeling fails its triads, 2 for
usage errors.  Output is byte-for-byte deterministic for fixed inputs;
verification records stream as JSON lines.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernel
from .errors import CeilingExceeded, SpinnetError, TriadViolation
from .exactnum import Spin
from .identities import (
    BE_SYMBOL_NAMES,
    BEInstance,
    be_check,
    iter_be_grid,
    iter_orthogonality_grid,
    orthogonality_check,
    pachner_14_check,
    pachner_23_check,
)
from .labeling import (
    SYMBOLS,
    label_desargues,
    network_amplitude,
    regularized_enumeration,
    transfer_labeling,
)
from .projective import (
    ConfigurationSignature,
    build_desargues,
    build_quadrangle,
    cross_section,
    isomorphic,
    plane_dual,
    space_dual_desargues,
    validate_configuration,
)
from .symmetry import (
    canonicalize_quadruple,
    regularization_bounds,
    running_range,
    symmetry_orbit,
)
from .wigner import SixJ, sixj_value

DEFAULT_CEILING = 6

ORTH_NAMES = ("a", "b", "c", "d", "y", "y'")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=2)


def _line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Out:
    def __init__(self, path):
        self._fh = open(path, "w") if path else sys.stdout
        self._close = bool(path)

    def write(self, text):
        self._fh.write(text)

    def done(self):
        if self._close:
            self._fh.close()


def _parse_spins(args, names, twice_mode):
    if len(args) != len(names):
        raise SpinnetError(
            f"expected {len(names)} spins ({' '.join(names)}), "
            f"got {len(args)}")
    if twice_mode:
        return [Spin(int(a)) for a in args]
    return [Spin.parse(a) for a in args]


def _spin_map_arg(text) -> dict[str, Spin]:
    out = {}
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise SpinnetError(f"bad spin assignment {item!r} (use sym=value)")
        k, v = item.split("=", 1)
        out[k.strip()] = Spin.parse(v)
    return out


def _instance_dict(names, spins) -> dict:
    return {n: str(s) for n, s in zip(names, spins)}


def verify_grid(max_twice: int, which: str, literal_form: bool = False,
                ceiling: int = DEFAULT_CEILING, sort_records: bool = False):
    """Exhaustive verification; returns (records, summary).

    which is one of 'orthogonality', 'be', 'pachner-23', 'pachner-14'.
    Raises CeilingExceeded when max_twice overshoots the runtime guard.
    """
    if max_twice > ceiling:
        raise CeilingExceeded(
            f"max twice-value {max_twice} exceeds ceiling {ceiling} "
            "(raise it with --ceiling)")
    records = []
    failures = 0

    if which == "orthogonality":
        for t in iter_orthogonality_grid(max_twice):
            spins = [Spin(v) for v in t]
            res = orthogonality_check(*spins)
            failures += not res.equal
            rec = {"instance": _instance_dict(ORTH_NAMES, spins)}
            rec.update(res.to_json_dict())
            records.append(rec)
    elif which in ("be", "pachner-23"):
        check = be_check if which == "be" else pachner_23_check
        for t in iter_be_grid(max_twice):
            inst = BEInstance.from_twice(t)
            res = check(inst, literal_form=literal_form)
            failures += not res.equal
            rec = {"instance": _instance_dict(
                BE_SYMBOL_NAMES, [getattr(inst, n) for n in BE_SYMBOL_NAMES])}
            rec.update(res.to_json_dict())
            records.append(rec)
    elif which == "pachner-14":
        for t in iter_be_grid(max_twice):
            inst = BEInstance.from_twice(t)
            for tpp in range(max_twice + 1):
                res = pachner_14_check(inst, Spin(tpp))
                failures += not res.equal
                rec = {"instance": _instance_dict(
                    BE_SYMBOL_NAMES + ("p'",),
                    [getattr(inst, n) for n in BE_SYMBOL_NAMES]
                    + [Spin(tpp)])}
                rec.update(res.to_json_dict())
                records.append(rec)
    else:
        raise SpinnetError(f"unknown verification grid {which!r}")

    if sort_records:
        records.sort(key=lambda r: sorted(r["instance"].items()))
    summary = {"instances": len(records), "failures": failures,
               "which": which}
    return records, summary


def _emit_verification(out, records, summary, fmt):
    if fmt == "json":
        for rec in records:
            out.write(_line(rec) + "\n")
        out.write(_line(summary) + "\n")
    else:
        out.write(f"{summary['instances']} instances, "
                  f"{summary['failures']} failures\n")
    return 1 if summary["failures"] else 0


def _single_result(out, res, instance, fmt):
    if fmt == "json":
        rec = {"instance": instance}
        rec.update(res.to_json_dict())
        out.write(_line(rec) + "\n")
    else:
        status = "holds" if res.equal else "VIOLATED"
        out.write(f"{res.form} {status}: lhs = {res.lhs}, rhs = {res.rhs}\n")
    return 0 if res.equal else 1


def _cmd_sixj(args, out):
    spins = _parse_spins(args.spins, ("a", "b", "x", "c", "d", "y"),
                         args.twice)
    value = sixj_value(SixJ(*spins))
    if args.format == "json":
        out.write(_dump({
            "entries": [str(s) for s in spins],
            "value": str(value),
            "approx": value.to_float(),
        }) + "\n")
    else:
        out.write(str(value) + "\n")
    return 0


def _cmd_orbit(args, out):
    spins = _parse_spins(args.spins, ("a", "b", "x", "c", "d", "y"),
                         args.twice)
    symbol = SixJ(*spins)
    orbit = sorted(symmetry_orbit(symbol), key=lambda s: s.twice_tuple())
    value = sixj_value(symbol)
    if args.format == "json":
        out.write(_dump({
            "symbol": [str(s) for s in spins],
            "value": str(value),
            "orbit_size": len(orbit),
            "orbit": [[str(e) for e in member.entries()]
                      for member in orbit],
        }) + "\n")
    else:
        out.write(f"orbit size {len(orbit)} (value {value})\n")
        for member in orbit:
            out.write(f"  {member}\n")
    return 0


def _cmd_verify_orth(args, out):
    if args.all:
        records, summary = verify_grid(args.max_twice, "orthogonality",
                                       ceiling=args.ceiling,
                                       sort_records=args.sorted)
        return _emit_verification(out, records, summary, args.format)
    spins = _parse_spins(args.spins, ORTH_NAMES, args.twice)
    res = orthogonality_check(*spins)
    return _single_result(out, res, _instance_dict(ORTH_NAMES, spins),
                          args.format)


def _cmd_verify_be(args, out):
    if args.all:
        records, summary = verify_grid(args.max_twice, "be",
                                       literal_form=args.literal_paper_form,
                                       ceiling=args.ceiling,
                                       sort_records=args.sorted)
        return _emit_verification(out, records, summary, args.format)
    spins = _parse_spins(args.spins, BE_SYMBOL_NAMES, args.twice)
    res = be_check(BEInstance(*spins),
                   literal_form=args.literal_paper_form)
    return _single_result(out, res, _instance_dict(BE_SYMBOL_NAMES, spins),
                          args.format)


def _cmd_verify_pachner(args, out):
    which = "pachner-23" if args.move == "23" else "pachner-14"
    if args.all:
        records, summary = verify_grid(args.max_twice, which,
                                       ceiling=args.ceiling,
                                       sort_records=args.sorted)
        return _emit_verification(out, records, summary, args.format)
    spins = _parse_spins(args.spins, BE_SYMBOL_NAMES, args.twice)
    inst = BEInstance(*spins)
    if args.move == "23":
        res = pachner_23_check(inst)
        instance = _instance_dict(BE_SYMBOL_NAMES, spins)
    else:
        if args.p_prime is None:
            raise SpinnetError("--move 14 needs --p-prime")
        pp = Spin(int(args.p_prime)) if args.twice \
            else Spin.parse(args.p_prime)
        res = pachner_14_check(inst, pp)
        instance = _instance_dict(BE_SYMBOL_NAMES + ("p'",),
                                  list(spins) + [pp])
    return _single_result(out, res, instance, args.format)


def _structure_out(out, structure, fmt):
    if fmt == "dot":
        out.write(structure.to_dot(bipartite=True))
    elif fmt == "json":
        out.write(_dump(structure.to_json_dict()) + "\n")
    else:
        out.write(f"{len(structure.points)} points, "
                  f"{len(structure.lines)} lines\n")
        for p in structure.points:
            tags = [structure.line_labels.get(l, str(l))
                    for l in structure.lines_through(p)]
            out.write(f"  {structure.point_labels.get(p, p)} on "
                      + " ".join(tags) + "\n")
    return 0


def _cmd_build_desargues(args, out):
    return _structure_out(out, build_desargues(), args.format)


def _cmd_space_dual(args, out):
    complex4 = space_dual_desargues(build_desargues())
    if args.format == "json":
        out.write(_dump(complex4.to_json_dict()) + "\n")
    else:
        v, e, t, tt = complex4.f_vector()
        out.write(f"f-vector ({v}, {e}, {t}, {tt})\n")
        for tet in complex4.tetrahedra:
            tags = [complex4.edge_labels[x]
                    for x in complex4.edges_of_tetrahedron(tet)]
            out.write(f"  T{complex4.tetra_labels[tet]}: "
                      + " ".join(sorted(tags)) + "\n")
    return 0


def _cmd_cross_section(args, out):
    section = cross_section(space_dual_desargues(build_desargues()))
    if args.format == "json":
        data = section.to_json_dict()
        data["validates_10_3"] = validate_configuration(
            section, ConfigurationSignature(10, 3, 10, 3))
        data["isomorphic_to_original"] = isomorphic(section,
                                                    build_desargues())
        out.write(_dump(data) + "\n")
        return 0
    return _structure_out(out, section, args.format)


def _cmd_label(args, out):
    spins = _spin_map_arg(args.spins)
    try:
        lab = label_desargues(spins)
    except TriadViolation as err:
        out.write(_dump({
            "valid": False,
            "violations": [
                {"point": tag, "symbols": list(syms),
                 "spins": [str(s) for s in triple]}
                for tag, syms, triple in err.violations],
        }) + "\n")
        return 1
    data = lab.to_json_dict()
    data["valid"] = True
    if args.transfer:
        sl = transfer_labeling(lab, space_dual_desargues(build_desargues()))
        data["tetrahedra"] = {
            f"T{i + 1}": str(sym)
            for i, sym in enumerate(sl.tetrahedron_symbols())}
    out.write(_dump(data) + "\n")
    return 0


def _cmd_amplitude(args, out):
    spins = _spin_map_arg(args.spins)
    try:
        lab = label_desargues(spins)
    except TriadViolation as err:
        out.write(_dump({
            "valid": False,
            "violations": [v[0] for v in err.violations],
        }) + "\n")
        return 1
    amp = network_amplitude(lab)
    if args.format == "json":
        out.write(_dump({"amplitude": str(amp),
                         "approx": amp.to_float()}) + "\n")
    else:
        out.write(str(amp) + "\n")
    return 0


def _cmd_regularize(args, out):
    spins = _parse_spins(args.spins, ("a", "b", "c", "d"), args.twice)
    quad = canonicalize_quadruple(*spins)
    x_min, x_max, y_min, y_max = running_range(quad)
    report = regularization_bounds(quad)
    data = {
        "canonical": {"a": str(quad.a), "b": str(quad.b),
                      "c": str(quad.c), "d": str(quad.d),
                      "s": str(quad.s)},
        "running_range": {"x_min": str(x_min), "x_max": str(x_max),
                          "y_min": str(y_min), "y_max": str(y_max)},
        "report": report.to_json_dict(),
    }
    if args.format == "json":
        out.write(_dump(data) + "\n")
    else:
        out.write(f"canonical {quad}\n")
        out.write(f"x in [{x_min}, {x_max}], y in [{y_min}, {y_max}]\n")
        out.write(f"report {report.to_json_dict()}\n")
    return 0


def _cmd_export(args, out):
    what = args.what
    if what == "quadrangle":
        structure = build_quadrangle()
    elif what == "quadrilateral":
        structure = plane_dual(build_quadrangle())
    elif what == "desargues":
        structure = build_desargues()
    elif what == "cross-section":
        structure = cross_section(space_dual_desargues(build_desargues()))
    else:  # simplex
        complex4 = space_dual_desargues(build_desargues())
        if args.format == "dot":
            raise SpinnetError("the 4-simplex exports as json only")
        out.write(_dump(complex4.to_json_dict()) + "\n")
        return 0
    if args.format == "dot":
        out.write(structure.to_dot(bipartite=not args.cliques))
        return 0
    return _structure_out(out, structure, args.format)


def _cmd_amplitudes_enumerate(args, out):
    spins = _parse_spins(args.spins, ("a", "b", "c", "d"), args.twice)
    others = _spin_map_arg(args.others)
    quad = canonicalize_quadruple(*spins)
    entries = regularized_enumeration(quad, others)
    data = {
        "canonical": str(quad),
        "states": len(entries),
        "entries": [{"x": str(x), "amplitude": str(a)} for x, a in entries],
    }
    if args.format == "json":
        out.write(_dump(data) + "\n")
    else:
        for x, a in entries:
            out.write(f"x={x}: {a}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinnet",
        description="Exact 6j symbols and projective spin networks "
                    f"(kernel backend: {kernel.backend()})",
        epilog="environment: SPINNET_FACT_CACHE caps the factorial memo "
               "table; SPINNET_NO_EXT=1 forces the pure-Python kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--output", "-o", default=None,
                       help="write to a file instead of stdout")
        return p

    def spin_opts(p):
        p.add_argument("--twice", action="store_true",
                       help="spin arguments are twice-value integers")

    def grid_opts(p):
        p.add_argument("--all", action="store_true",
                       help="run the exhaustive grid")
        p.add_argument("--max-twice", type=int, default=2)
        p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
        p.add_argument("--sorted", action="store_true",
                       help="canonical record order")

    p = add("sixj", _cmd_sixj, help="evaluate one 6j symbol exactly")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    spin_opts(p)

    p = add("orbit", _cmd_orbit,
            help="orbit under the 144-element symmetry group")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    spin_opts(p)

    p = add("verify-orth", _cmd_verify_orth,
            help="check the orthogonality condition")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    spin_opts(p)
    grid_opts(p)

    p = add("verify-be", _cmd_verify_be, help="check the pentagon identity")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--literal-paper-form", action="store_true",
                   help="drop the (2x+1) weight from the x-sum")
    spin_opts(p)
    grid_opts(p)

    p = add("verify-pachner", _cmd_verify_pachner,
            help="check a Pachner move identity")
    p.add_argument("--move", choices=("23", "14"), required=True)
    p.add_argument("--p-prime", default=None,
                   help="the spin p' for the 1-4 contraction")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="text")
    spin_opts(p)
    grid_opts(p)

    p = add("build-desargues", _cmd_build_desargues,
            help="emit the ten-point configuration")
    p.add_argument("--format", choices=("json", "dot", "text"),
                   default="json")

    p = add("space-dual", _cmd_space_dual,
            help="emit the space-dual 4-simplex complex")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = add("cross-section", _cmd_cross_section,
            help="slice the 4-simplex back to the configuration")
    p.add_argument("--format", choices=("json", "dot", "text"),
                   default="json")

    p = add("label", _cmd_label, help="validate a ten-spin labeling")
    p.add_argument("--spins", required=True,
                   help="comma list a=1,b=3/2,...,x=1 over "
                        + ",".join(SYMBOLS))
    p.add_argument("--transfer", action="store_true",
                   help="also transport the labels to the 4-simplex")

    p = add("amplitude", _cmd_amplitude,
            help="five-symbol product amplitude of a labeling")
    p.add_argument("--spins", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("regularize", _cmd_regularize,
            help="canonical quadruple, running ranges and bounds report")
    p.add_argument("spins", nargs="*")
    p.add_argument("--format", choices=("text", "json"), default="json")
    spin_opts(p)

    p = add("enumerate", _cmd_amplitudes_enumerate,
            help="amplitudes over the running range of a reference "
                 "quadrangle")
    p.add_argument("spins", nargs="*", help="the quadruple a b c d")
    p.add_argument("--others", required=True,
                   help="comma list e=..,f=..,p=..,q=..,r=..")
    p.add_argument("--format", choices=("text", "json"), default="json")
    spin_opts(p)

    p = add("export", _cmd_export, help="export a built-in structure")
    p.add_argument("what", choices=("desargues", "quadrangle",
                                    "quadrilateral", "simplex",
                                    "cross-section"))
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--cliques", action="store_true",
                   help="dot: draw lines as point cliques instead of "
                        "bipartite nodes")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(getattr(args, "output", None))
    try:
        code = args.fn(args, out)
    except CeilingExceeded as err:
        print(f"spinnet: {err}", file=sys.stderr)
        return 2
    except SpinnetError as err:
        print(f"spinnet: {err}", file=sys.stderr)
        return 2
    finally:
        out.done()
    return code


if __name__ == "__main__":
    sys.exit(main())
