"""The ``hullcheck`` command line.

Every subcommand is a thin shell over the library.  ``status`` exits with
0 (overlap), 2 (quasi separation), 3 (complete separation) or 4 (no mixed
results); other commands exit 0 on success.  Errors exit 1 and usage
errors 64.
"""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys

import numpy as np

from . import __version__
from .catalog import (
    SEARCH_TABLE,
    add_compose,
    get_entry,
    identify,
    lattice_search,
    load_catalog,
    make_quasi,
)
from .dataset import Dataset, load_dataset
from .elcore import SolverOptions
from .errors import HullcheckError
from .forms import interim_form, make_equidistant, make_standard_type1, to_standard_form, unit_simplex
from .minimal import deflate, deflate_shuffled, removal_depths
from .render import RenderSpec, render_svg
from .status import classify, lp_separation, origin_interior_lp

__all__ = ["main", "run", "build_parser"]

EXIT_ERROR = 1
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--eps", type=float, default=d(1e-8), help="status band width (default 1e-8)")
    p.add_argument("--seed", type=int, default=d(None), help="random seed")
    p.add_argument("--out", default=d(None), help="write the main output to this file")
    p.add_argument("--format", choices=("csv", "json"), default=d(None), help="output format")
    p.add_argument("--verbose", action="store_true", default=d(False), help="include solver diagnostics")
    p.add_argument("--max-iter", type=int, default=d(100), help="Newton iteration cap")
    p.add_argument("--newton-tol", type=float, default=d(1e-12), help="Newton decrement tolerance")
    p.add_argument("--grad-tol", type=float, default=d(1e-10), help="gradient tolerance")
    return p


def build_parser():
    parser = _Parser(prog="hullcheck", description=__doc__.splitlines()[0], parents=[_common(False)])
    parser.add_argument("--version", action="version", version=f"hullcheck {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_common(True)]

    p = sub.add_parser("status", parents=common, help="overlap status of a data file")
    p.add_argument("file")

    p = sub.add_parser("deflate", parents=common, help="minimal overlapping core of a data file")
    p.add_argument("file")

    p = sub.add_parser("depth", parents=common, help="removal depths of overlapping data")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=3)

    p = sub.add_parser("forms", parents=common, help="standard, interim or equidistant form")
    p.add_argument("kind", choices=("std", "intrm", "equid"))
    p.add_argument("file")

    p = sub.add_parser("gen", parents=common, help="generate configurations")
    gsub = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("stdf", "equid"):
        g = gsub.add_parser(name, parents=common)
        g.add_argument("d1", type=int)
        g.add_argument("d0", type=int)
    g = gsub.add_parser("esimp", parents=common)
    g.add_argument("d", type=int)
    g = gsub.add_parser("rquaz", parents=common)
    g.add_argument("n", type=int)
    g.add_argument("d", type=int)
    g = gsub.add_parser("add", parents=common, help="add catalog entries, e.g. a,b or b,b'")
    g.add_argument("spec")

    p = sub.add_parser("catalog", parents=common, help="the embedded catalog")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    csub.add_parser("list", parents=common)
    c = csub.add_parser("search", parents=common)
    c.add_argument("basis", nargs="?", help="basis id; all published cells when omitted")
    c.add_argument("location", nargs="?", choices=("bottom", "middle"))
    c.add_argument("--dim", type=int, choices=(2, 3), default=3)
    c = csub.add_parser("identify", parents=common)
    c.add_argument("file")

    p = sub.add_parser("render", parents=common, help="SVG picture of a file or catalog entries")
    p.add_argument("target", help="data file, or comma-separated catalog ids")
    p.add_argument("--projection", choices=("iso", "xy"), default="iso")
    p.add_argument("--icon-size", type=float, default=14.0)
    p.add_argument("--no-grid", action="store_true")
    p.add_argument("--columns", type=int, default=6)

    p = sub.add_parser("compare-lp", parents=common, help="EL versus LP verdicts over many files")
    p.add_argument("paths", nargs="+", help="directories (their *.csv files) or glob patterns")
    return parser


def _opts(a):
    return SolverOptions(max_iter=a.max_iter, decrement_tol=a.newton_tol, grad_tol=a.grad_tol)


def _load(path):
    fmt = "json" if path.endswith(".json") else "csv"
    if path == "-":
        return load_dataset(sys.stdin.read())
    return load_dataset(path, format=fmt)


def _emit(text, a, out):
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _matrix_csv(M):
    M = np.asarray(M, dtype=float)
    lines = [",".join(f"x{j + 1}" for j in range(M.shape[1]))]
    lines += [",".join(_num(v) for v in row) for row in M]
    return "\n".join(lines) + "\n"


def _num(v):
    v = float(v) + 0.0
    return str(int(v)) if v.is_integer() else repr(v)


def _cmd_status(a, out):
    rep = classify(_load(a.file), a.eps, _opts(a))
    info = rep.to_dict()
    if a.verbose and rep.solution is not None:
        info["solver"] = rep.solution.to_dict()
    _emit(f"{rep.status}\n{json.dumps(info, indent=2)}\n", a, out)
    return rep.status.exit_code


def _cmd_deflate(a, out):
    L = _load(a.file)
    core = deflate_shuffled(L, a.seed, a.eps) if a.seed is not None else deflate(L, eps=a.eps)
    side = core.to_dict()
    if a.format == "json":
        _emit(json.dumps({**side, "data": core.data.to_json()}, indent=2) + "\n", a, out)
        return 0
    _emit(core.data.to_csv(), a, out)
    if a.out:
        with open(os.path.splitext(a.out)[0] + ".json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(side) + "\n")
    else:
        sys.stderr.write(json.dumps(side) + "\n")
    return 0


def _cmd_depth(a, out):
    rep = removal_depths(_load(a.file), a.kmax, a.eps)
    _emit(json.dumps(rep.to_dict(), indent=2) + "\n", a, out)
    return 0


def _cmd_forms(a, out):
    L = _load(a.file)
    if a.kind == "intrm":
        text = _matrix_csv(interim_form(L, a.eps))
    elif a.kind == "std":
        sf = to_standard_form(L, a.eps)
        text = json.dumps(sf.to_dict(), indent=2) + "\n" if a.format == "json" else sf.dataset.to_csv()
    else:
        sf = to_standard_form(L, a.eps)
        text = make_equidistant(sf.d1, sf.d0).to_csv()
    _emit(text, a, out)
    return 0


def _parse_components(spec):
    comps = []
    for token in spec.split(","):
        token = token.strip()
        flip = token.endswith("'")
        data = get_entry(token.rstrip("'")).data
        comps.append(data.flipped() if flip else data)
    return comps


def _cmd_gen(a, out):
    if a.what == "stdf":
        L = make_standard_type1(a.d1, a.d0)
    elif a.what == "equid":
        L = make_equidistant(a.d1, a.d0)
    elif a.what == "esimp":
        _emit(_matrix_csv(unit_simplex(a.d)), a, out)
        return 0
    elif a.what == "rquaz":
        L = make_quasi(a.n, a.d, 0 if a.seed is None else a.seed)
    else:
        L = add_compose(_parse_components(a.spec), seed=a.seed, eps=a.eps)
    _emit(json.dumps(L.to_json()) + "\n" if a.format == "json" else L.to_csv(), a, out)
    return 0


def _cmd_catalog(a, out):
    if a.action == "list":
        rows = [
            {"id": e.id, "kind": e.kind.value, "format": e.format, "d": e.d_eff, "n": e.n}
            for e in load_catalog()
        ]
        if a.format == "json":
            text = json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
        else:
            text = "".join(f"{r['id']:<4} {r['kind']:<7} d={r['d']} n={r['n']}  {r['format']}\n" for r in rows)
        _emit(text, a, out)
        return 0
    if a.action == "identify":
        m = identify(_load(a.file), a.eps)
        _emit(json.dumps(m.to_dict()) + "\n", a, out)
        return 0
    if a.basis is None:
        cells = list(SEARCH_TABLE) if a.dim == 3 else [("b", "bottom"), ("b", "middle")]
    else:
        locs = [a.location] if a.location else ["bottom", "middle"]
        cells = [(a.basis, loc) for loc in locs]
    reports = [lattice_search(b, loc, a.dim, eps=a.eps).to_dict() for b, loc in cells]
    if a.format == "json":
        text = json.dumps(reports, indent=2) + "\n"
    else:
        text = "".join(
            f"{r['basis']} {r['location']:<6} overlap={r['overlap']} type2={r['type2']} new={r['new']} "
            + " ".join(f"{i}:{c}" for i, c in r["ids"])
            + "\n"
            for r in reports
        )
    _emit(text, a, out)
    return 0


def _cmd_render(a, out):
    target = a.target
    if os.path.exists(target):
        L = _load(target)
        spec_input, title = L, None
    else:
        spec_input, title = [t.strip() for t in target.split(",") if t.strip()], None
    spec = RenderSpec(spec_input, a.projection, a.icon_size, not a.no_grid, a.columns, title)
    _emit(render_svg(spec), a, out)
    return 0


def _expand(paths):
    files = []
    for p in paths:
        if os.path.isdir(p):
            files += sorted(glob.glob(os.path.join(p, "*.csv")))
        else:
            files += sorted(glob.glob(p))
    return files


def _cmd_compare(a, out):
    files = _expand(a.paths)
    if not files:
        raise HullcheckError("no data files matched")
    rows, agree = [], True
    for f in files:
        L = _load(f)
        st = classify(L, a.eps, _opts(a)).status
        if L.n1 * L.n0 == 0:
            sep = interior = None
            ok = True
        else:
            sep = lp_separation(L).separated
            interior = origin_interior_lp(L)
            ok = (st.value == "Overlap") == (not sep) == interior
        agree &= ok
        rows.append({"file": f, "status": st.value, "lp_separated": sep, "lp_interior": interior, "agree": ok})
    if a.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        text = "".join(
            f"{r['file']}\t{r['status']}\tseparated={r['lp_separated']}\tinterior={r['lp_interior']}\t"
            f"{'ok' if r['agree'] else 'DISAGREE'}\n"
            for r in rows
        )
    _emit(text, a, out)
    return 0 if agree else EXIT_ERROR


COMMANDS = {
    "status": _cmd_status,
    "deflate": _cmd_deflate,
    "depth": _cmd_depth,
    "forms": _cmd_forms,
    "gen": _cmd_gen,
    "catalog": _cmd_catalog,
    "render": _cmd_render,
    "compare-lp": _cmd_compare,
}


def run(argv, out=None):
    """Run the command line on ``argv`` and return the exit code."""
    out = out or sys.stdout
    try:
        a = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_USAGE
    try:
        return COMMANDS[a.command](a, out)
    except (HullcheckError, ValueError, KeyError, OSError, MemoryError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"hullcheck: error: {msg}\n")
        return EXIT_ERROR


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
