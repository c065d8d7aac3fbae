"""Command-line front end.

Exit status: 0 success, 1 empty packet or invalid parameter, 2 I/O or
syntax error, 3 command not available for the group kind.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, TextIO

from . import __version__
from .document import (
    DocumentError,
    InputDocument,
    factor_to_json,
    group_to_json,
    parse_document,
)
from .errors import ParameterError, SignatureMismatch
from .packet import (
    PacketEntry,
    Range,
    Status,
    component_group,
    count_decompositions,
    EntryFactory,
    decomposition_prefixes,
    epsilon_factors,
    iter_decompositions,
    good_range_check,
    iter_entries,
)
from .params import (
    GoodParityParam,
    classify_parity_classical,
    classify_parity_unitary,
    pair_bad_part,
    split_parity,
    validate_parameter,
)
from .reduce import (
    ZeroPacket,
    delta_u_twist,
    inf_char_blocks,
    parity_shift_check,
    reduce_classical,
    reduce_unitary,
    rho_sharp,
)
from .rootdata import SignatureDecomposition, levi_data

DEFAULT_MAX_ENTRIES = 10**7


class CliError(Exception):
    def __init__(self, status: int, message: str, payload: Optional[dict] = None):
        super().__init__(message)
        self.status = status
        self.payload = payload


class Stream:
    """A lazily produced JSON list, written one item per line."""

    def __init__(self, lines: Iterable[str]):
        self.lines = lines


def _q(x: Fraction) -> str:
    return str(x)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def write_json(out: TextIO, obj: dict, indent: int = 0) -> None:
    """Write a dict with one key per line; nested dicts expand, Streams stream.

    A value may be a zero-argument callable, evaluated when its key is reached.
    """
    pad = " " * (indent + 2)
    out.write("{\n")
    items = list(obj.items())
    for k, (key, value) in enumerate(items):
        if callable(value):
            value = value()
        out.write(f"{pad}{_dump(key)}: ")
        if isinstance(value, dict) and value:
            write_json(out, value, indent + 2)
        elif isinstance(value, Stream) or (isinstance(value, list) and value and isinstance(value[0], dict)):
            lines = value.lines if isinstance(value, Stream) else (_dump(v) for v in value)
            first = True
            for line in lines:
                out.write("[\n" if first else ",\n")
                out.write(f"{pad}  {line}")
                first = False
            out.write("[]" if first else f"\n{pad}]")
        else:
            out.write(_dump(value))
        out.write(",\n" if k < len(items) - 1 else "\n")
    out.write(" " * indent + "}")
    if indent == 0:
        out.write("\n")


# --- inputs -------------------------------------------------------------------------


def _read_input(path: Optional[str]) -> tuple:
    if not path:
        raise CliError(2, "no input file given (use --input PATH)")
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CliError(2, f"cannot read {path}: {exc.strerror}") from exc
    try:
        text = data.decode("utf-8")
        doc = parse_document(text)
    except (UnicodeDecodeError, DocumentError) as exc:
        raise CliError(2, f"cannot parse {path}: {exc}") from exc
    return doc, hashlib.sha256(data).hexdigest()


def _validated(doc: InputDocument):
    try:
        return validate_parameter(doc.factors, doc.group.p, doc.group.q)
    except ParameterError as exc:
        raise CliError(1, str(exc), _error_payload(exc)) from exc


def _error_payload(exc: Exception) -> dict:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    factor = getattr(exc, "factor", None)
    if factor is not None:
        payload["factor"] = factor_to_json(factor)
    return payload


def _require_unitary(doc: InputDocument, cmd: str) -> None:
    if not doc.is_unitary:
        raise CliError(3, f"'{cmd}' needs a unitary group; use 'reduce' for {doc.group}")


# --- entries --------------------------------------------------------------------------


def entry_to_json(e: PacketEntry) -> dict:
    return {
        "d": [list(b) for b in e.d.blocks],
        "lambda": list(e.lambda_.exponents),
        "dlambda": list(e.lambda_.dlambda),
        "S": e.S,
        "epsilon": list(e.epsilon),
        "character": None if e.character is None else list(e.character),
        "status": e.status.value,
    }


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_sign(v) -> str:
    return "(" + ", ".join("+" if x > 0 else "-" for x in v) + ")"


def entry_to_row(e: PacketEntry) -> List[str]:
    d = "[" + " ".join(f"({p},{q})" for p, q in e.d.blocks) + "]"
    ch = "-" if e.character is None else _fmt_sign(e.character)
    return [d, _fmt_vec(e.lambda_.exponents), str(e.S), _fmt_sign(e.epsilon), ch, e.status.value]


class JsonLineBuilder:
    """Builds ``json.dumps(entry_to_json(e))`` straight from a p-vector.

    The text for every block is prepared once, so an entry costs a few joins.
    """

    def __init__(self, psi: GoodParityParam, p: int, q: int, show_zero: bool = True):
        self.show_zero = show_zero
        f = self.factory = EntryFactory(psi, p, q)
        self.d = [[f"[{x}, {y}]" for x, y in row] for row in f.blocks]
        self.eps = [[str(v) for v in row] for row in f.eps]
        # whole-block fragments of the dlambda list; empty blocks are left out
        self.dl_p = [[[", ".join(map(str, t))] if t else [] for t in row] for row in f.dl_p]
        self.dl_q = [[[", ".join(map(str, t))] if t else [] for t in row] for row in f.dl_q]
        self.head = '{"d": ['
        self.lam = '], "lambda": ' + _dump(list(f.exponents)) + ', "dlambda": ['

    def line(self, pv) -> Optional[str]:
        """The JSON text of the entry; None for a screened-out entry unless ``show_zero``."""
        f = self.factory
        idx = list(enumerate(pv))
        status = f.status([f.blocks[i][x] for i, x in idx]) if f.equal_t else f.status(())
        dl = [v for i, x in idx for v in self.dl_p[i][x]]
        for i, x in reversed(idx):
            dl.extend(self.dl_q[i][x])
        if status is Status.ZERO_BY_SCREEN and not self.show_zero:
            return None
        eps = ", ".join([self.eps[i][x] for i, x in idx])
        if status is Status.ZERO_BY_SCREEN:
            ch = "null"
        elif f.singleton_classes:
            ch = "[" + eps + "]"
        else:
            signs = tuple([f.eps[i][x] for i, x in idx])
            ch = _dump(list(epsilon_factors(f.cg, signs)))
        S = f.S_base - sum([f.S_loss[i][x] for i, x in idx])
        return "".join(
            (
                self.head,
                ", ".join([self.d[i][x] for i, x in idx]),
                self.lam,
                ", ".join(dl),
                '], "S": ',
                str(S),
                ', "epsilon": [',
                eps,
                '], "character": ',
                ch,
                ', "status": "',
                status.value,
                '"}',
            )
        )


def _render_chunk(args) -> tuple:
    psi, p, q, prefix, show_zero = args
    builder = JsonLineBuilder(psi, p, q, show_zero)
    out = []
    hidden = 0
    for pv in iter_decompositions(psi, p, q, prefix):
        line = builder.line(pv)
        if line is None:
            hidden += 1
        else:
            out.append(line)
    return out, hidden


class _EntryRenderer:
    """Renders packet entries, serially or across processes, in lexicographic order."""

    def __init__(self, psi: GoodParityParam, p: int, q: int, show_zero: bool, jobs: int):
        self.psi, self.p, self.q = psi, p, q
        self.show_zero = show_zero
        self.jobs = jobs
        self.hidden = 0

    def _serial(self) -> Iterable[PacketEntry]:
        for e in iter_entries(self.psi, self.p, self.q):
            if not self.show_zero and e.status is Status.ZERO_BY_SCREEN:
                self.hidden += 1
                continue
            yield e

    def json_lines(self) -> Iterable[str]:
        if self.jobs <= 1:
            builder = JsonLineBuilder(self.psi, self.p, self.q, self.show_zero)
            for pv in iter_decompositions(self.psi, self.p, self.q):
                line = builder.line(pv)
                if line is None:
                    self.hidden += 1
                else:
                    yield line
            return
        depth = 0
        prefixes = [()]
        while len(prefixes) < 8 * self.jobs and depth < self.psi.ell:
            depth += 1
            prefixes = decomposition_prefixes(self.psi, self.p, depth)
        tasks = [(self.psi, self.p, self.q, pre, self.show_zero) for pre in prefixes]
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            for chunk, hidden in pool.map(_render_chunk, tasks):
                self.hidden += hidden
                yield from chunk

    def entries(self) -> Iterable[PacketEntry]:
        return self._serial()


def _gl_block_json(b) -> dict:
    if hasattr(b, "kind"):
        out = {"kind": b.kind.value}
        if b.t is not None:
            out["t"] = b.t
        if b.eps is not None:
            out["eps"] = b.eps
        out.update({"nu": _q(b.nu), "a": b.a, "gl_rank": b.gl_rank})
        return out
    return {"t": b.t, "nu": _q(b.nu), "a": b.a}


def _max_entries() -> int:
    raw = os.environ.get("APACKET_MAX_ENTRIES")
    if raw is None:
        return DEFAULT_MAX_ENTRIES
    try:
        return int(raw)
    except ValueError as exc:
        raise CliError(2, f"APACKET_MAX_ENTRIES must be an integer, got {raw!r}") from exc


# --- commands -------------------------------------------------------------------------


def _report(command: str, digest: str, result, warnings: Callable[[], list], options: dict) -> dict:
    return {
        "command": {"name": command, **options},
        "input_sha256": digest,
        "result": result,
        "warnings": warnings,
    }


def cmd_validate(args) -> tuple:
    doc, digest = _read_input(args.input)
    if doc.is_unitary:
        psi = _validated(doc)
        result = {"valid": True, "group": group_to_json(doc.group), "N": psi.N}
    else:
        try:
            reduce_classical(doc.factors, doc.group)
        except ParameterError as exc:
            raise CliError(1, str(exc), _error_payload(exc)) from exc
        result = {"valid": True, "group": group_to_json(doc.group)}
    report = _report("validate", digest, result, lambda: [], {})
    lines = ["valid", f"group: {doc.group}"]
    return report, lines


def cmd_packet(args) -> tuple:
    doc, digest = _read_input(args.input)
    _require_unitary(doc, "packet")
    psi = _validated(doc)
    datum = reduce_unitary(psi)
    if isinstance(datum, ZeroPacket):
        raise CliError(1, f"packet is zero: {datum.reason}", {"zero": True, "reason": datum.reason})
    inner = datum.inner_param
    p_bp, q_bp = datum.inner_group
    total = count_decompositions(inner.a, p_bp)
    cap = _max_entries()
    if total > cap:
        raise CliError(1, f"packet has {total} entries, above APACKET_MAX_ENTRIES={cap}")
    split = split_parity(psi)
    renderer = _EntryRenderer(inner, p_bp, q_bp, args.show_zero, args.jobs)
    rng = Range.GOOD_RANGE if good_range_check(inner) else Range.WEAKLY_FAIR_ONLY

    def warnings():
        if renderer.hidden:
            return [f"{renderer.hidden} entries with status {Status.ZERO_BY_SCREEN.value} hidden; use --show-zero"]
        return []

    header = {
        "group": group_to_json(doc.group),
        "reduction": {
            "a_mp": split.a_mp,
            "gl_blocks": [_gl_block_json(b) for b in datum.gl_blocks],
            "inner_group": list(datum.inner_group),
            "irreducible_claim": datum.irreducible_claim,
        },
        "psi": {"pairs": [list(x) for x in inner.pairs], "N": inner.N},
        "range": rng.value,
        "component_group": [list(c) for c in component_group(inner).classes],
        "decomposition_count": total,
    }
    if args.format == "json":
        result = dict(header, entries=Stream(renderer.json_lines()))
        return _report("packet", digest, result, warnings, {"show_zero": args.show_zero}), None

    def table_lines():
        yield f"group: {doc.group}"
        if datum.gl_blocks:
            blocks = ", ".join(f"chi({b.t}, {b.nu}, {b.a})" for b in datum.gl_blocks)
            yield f"GL blocks: {blocks}; inner group U({p_bp}, {q_bp})"
        yield f"psi: {list(inner.pairs)}  N={inner.N}  range: {rng.value}  |D| = {total}"
        rows = [entry_to_row(e) for e in renderer.entries()]
        yield from _table(["d", "lambda", "S", "epsilon", "character", "status"], rows)
        for w in warnings():
            yield f"warning: {w}"

    return None, table_lines()


def _table(headers: Sequence[str], rows: List[List[str]]) -> List[str]:
    widths = [len(h) for h in headers]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    fmt = lambda r: " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    return [fmt(headers), "-+-".join("-" * w for w in widths)] + [fmt(r) for r in rows]


def cmd_rootdata(args) -> tuple:
    if args.input:
        try:
            with open(args.input, "rb") as fh:
                data = fh.read()
            raw = json.loads(data.decode("utf-8"))
            d = SignatureDecomposition(tuple(tuple(b) for b in raw["blocks"]))
            p, q = raw.get("p", d.p), raw.get("q", d.q)
        except OSError as exc:
            raise CliError(2, f"cannot read {args.input}: {exc.strerror}") from exc
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(2, f"cannot parse {args.input}: {exc}") from exc
        digest = hashlib.sha256(data).hexdigest()
    else:
        if not args.d:
            raise CliError(2, "rootdata needs --d or --input")
        try:
            d = SignatureDecomposition.parse(args.d)
            p, q = (int(x) for x in args.pq.split(",")) if args.pq else (d.p, d.q)
        except ValueError as exc:
            raise CliError(2, f"cannot parse blocks: {exc}") from exc
        digest = hashlib.sha256(f"{d};{p},{q}".encode()).hexdigest()
    try:
        ld = levi_data(d, p, q)
    except SignatureMismatch as exc:
        raise CliError(1, str(exc), _error_payload(exc)) from exc
    result = {
        "d": [list(b) for b in d.blocks],
        "p": p,
        "q": q,
        "t_d": list(ld.t_d),
        "delta_l_pq": [_q(x) for x in ld.delta_l_pq],
        "delta_l_d": [_q(x) for x in ld.delta_l_d],
        "delta_v_d": [_q(x) for x in ld.delta_v_d],
        "dim_v": ld.dim_v,
        "S": ld.S,
    }
    lines = [f"{k}: {_fmt_vec(v) if isinstance(v, list) else v}" for k, v in result.items()]
    return _report("rootdata", digest, result, lambda: [], {}), lines


def cmd_parity(args) -> tuple:
    doc, digest = _read_input(args.input)
    rows = []
    if doc.is_unitary:
        psi = _validated(doc)
        split = split_parity(psi)
        factors = []
        for f in psi.factors:
            par = classify_parity_unitary(f, psi.N)
            factors.append(dict(factor_to_json(f), parity=par.value))
            rows.append([str(f.t), str(f.nu), str(f.a), par.value])
        result = {
            "group": group_to_json(doc.group),
            "factors": factors,
            "good": [list(x) for x in split.good.pairs],
            "eprime": [factor_to_json(f) for f in split.eprime],
            "N_bp": split.N_bp,
            "a_mp": split.a_mp,
        }
        lines = _table(["t", "nu", "a", "parity"], rows) + [f"N_bp = {split.N_bp}", f"a_mp = {split.a_mp}"]
    else:
        factors = []
        for f in doc.factors:
            par = classify_parity_classical(f, doc.group)
            factors.append(dict(factor_to_json(f), parity=par.value))
            rows.append([str(f), par.value])
        result = {"group": group_to_json(doc.group), "factors": factors}
        lines = _table(["factor", "parity"], rows)
    return _report("parity", digest, result, lambda: [], {}), [f"group: {doc.group}"] + lines


def cmd_infchar(args) -> tuple:
    warnings = []
    if args.pairs:
        try:
            pairs = [tuple(int(x) for x in c.split(",")) for c in args.pairs.split(";")]
            if any(len(pr) != 2 or pr[1] < 1 for pr in pairs):
                raise ValueError("each pair is t,a with a >= 1")
        except ValueError as exc:
            raise CliError(2, f"cannot parse --pairs: {exc}") from exc
        digest = hashlib.sha256(args.pairs.encode()).hexdigest()
    else:
        doc, digest = _read_input(args.input)
        _require_unitary(doc, "infchar")
        pairs = []
        for f in doc.factors:
            if f.nu != 0:
                warnings.append(f"factor {f} has nonzero nu and is skipped")
            else:
                pairs.append((f.t, f.a))
    values = inf_char_blocks(pairs)
    result = {
        "pairs": [list(x) for x in pairs],
        "infinitesimal_character": [_q(x) for x in values],
        "regular": len(set(values)) == len(values),
    }
    lines = [", ".join(_q(x) for x in values)] + [f"warning: {w}" for w in warnings]
    return _report("infchar", digest, result, lambda: warnings, {}), lines


def cmd_reduce(args) -> tuple:
    doc, digest = _read_input(args.input)
    if doc.is_unitary:
        psi = _validated(doc)
        split = split_parity(psi)
        datum = reduce_unitary(psi)
        if isinstance(datum, ZeroPacket):
            raise CliError(
                1,
                f"packet is zero: {datum.reason}",
                {"zero": True, "rule": "min(p, q) < a_mp", "reason": datum.reason},
            )
        result = {
            "group": group_to_json(doc.group),
            "a_mp": split.a_mp,
            "N_bp": split.N_bp,
            "gl_blocks": [_gl_block_json(b) for b in datum.gl_blocks],
            "inner_group": list(datum.inner_group),
            "inner_param": {"pairs": [list(x) for x in datum.inner_param.pairs], "N": datum.inner_param.N},
            "component_group": [list(c) for c in component_group(datum.inner_param).classes],
            "irreducible_claim": datum.irreducible_claim,
        }
        lines = [
            f"group: {doc.group}",
            f"a_mp = {split.a_mp}, N_bp = {split.N_bp}",
            "GL blocks: " + (", ".join(f"chi({b.t}, {b.nu}, {b.a})" for b in datum.gl_blocks) or "none"),
            f"inner group: U{tuple(datum.inner_group)}",
            f"inner pairs: {list(datum.inner_param.pairs)}",
        ]
        return _report("reduce", digest, result, lambda: [], {}), lines
    g = doc.group
    try:
        datum = reduce_classical(doc.factors, g)
    except ParameterError as exc:
        raise CliError(1, str(exc), _error_payload(exc)) from exc
    if isinstance(datum, ZeroPacket):
        raise CliError(
            1, f"packet is zero: {datum.reason}", {"zero": True, "rule": "min(p, q) < N_rho", "reason": datum.reason}
        )
    rho = pair_bad_part(doc.factors, g)[0]
    sharp = rho_sharp(rho)
    n_rho_prime = sum(f.a for f in sharp)
    n0 = g.rank - 2 * n_rho_prime
    twist = delta_u_twist(g.rank, n_rho_prime, n0, g) if n0 >= 0 else None
    shifts = [
        {"factor": factor_to_json(f), "bad_for_unitary": parity_shift_check(f, g.rank, n_rho_prime, g)}
        for f in sharp
        if f.nu == 0
    ]
    result = {
        "group": group_to_json(g),
        "epsG": _q(g.epsG),
        "gl_blocks": [_gl_block_json(b) for b in datum.gl_blocks],
        "N_rho": datum.gl_rank,
        "inner_group": group_to_json(datum.inner_group),
        "inner_param": [factor_to_json(f) for f in datum.inner_param],
        "irreducible_claim": datum.irreducible_claim,
        "rho_sharp": [factor_to_json(f) for f in sharp],
        "N_rho_prime": n_rho_prime,
        "delta_u": None if twist is None else [_q(x) for x in twist],
        "parity_shift": shifts,
    }
    lines = [
        f"group: {g}",
        "GL blocks: " + (", ".join(f"{b.kind.value}(a={b.a}, rank {b.gl_rank})" for b in datum.gl_blocks) or "none"),
        f"inner group: {datum.inner_group}",
        "inner factors: " + (", ".join(str(f) for f in datum.inner_param) or "none"),
    ]
    return _report("reduce", digest, result, lambda: [], {}), lines


COMMANDS = {
    "validate": cmd_validate,
    "packet": cmd_packet,
    "rootdata": cmd_rootdata,
    "parity": cmd_parity,
    "infchar": cmd_infchar,
    "reduce": cmd_reduce,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apacket", description="Arthur packets of real unitary groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input_pos", nargs="?", metavar="INPUT", help="input file (same as --input)")
        sp.add_argument("--input", help="input JSON document")
        sp.add_argument("--format", choices=("json", "table"), default="table")
        sp.add_argument("--output", help="write the report here instead of stdout")
        return sp

    add("validate", "check a parameter file")
    sp = add("packet", "packet of a unitary parameter (reduces the bad part first)")
    sp.add_argument("--show-zero", action="store_true", help="also list members that fail the screen")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for entry evaluation")
    sp = add("rootdata", "theta-stable parabolic data of a decomposition")
    sp.add_argument("--d", help='blocks as "p1,q1;p2,q2;..."')
    sp.add_argument("--pq", help='signature as "p,q"')
    add("parity", "good/bad parity table")
    sp = add("infchar", "infinitesimal character blocks")
    sp.add_argument("--pairs", help='pairs as "t1,a1;t2,a2;..."')
    add("reduce", "reduction to good parity")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    args.input = args.input or args.input_pos
    fmt = args.format
    try:
        report, lines = COMMANDS[args.command](args)
        status = 0
    except CliError as exc:
        status = exc.status
        report = {"command": {"name": args.command}, "error": exc.payload or {"message": str(exc)}}
        lines = [f"error: {exc}"]
        print(f"apacket {args.command}: {exc}", file=stderr)
    out, close = stdout, False
    if args.output:
        try:
            out = open(args.output, "w", encoding="utf-8", newline="\n")
            close = True
        except OSError as exc:
            print(f"apacket: cannot write {args.output}: {exc.strerror}", file=stderr)
            return 2
    try:
        if fmt == "json" and report is not None:
            write_json(out, report)
        elif lines is not None:
            for line in lines:
                out.write(line + "\n")
    finally:
        if close:
            out.close()
    return status


if __name__ == "__main__":
    sys.exit(main())
