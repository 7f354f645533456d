"""Command-line front end.

    gmsplit validate SPEC
    gmsplit enumerate SPEC [--n-max N] [--max-arcs K] [--no-tubes] [--json]
    gmsplit genus SPEC
    gmsplit cut SPEC --edge ID [-o PREFIX]
    gmsplit amalgamate LEVELS
    gmsplit explain SPEC [--candidate I]

Exit status: 0 on success, 1 when the input is well-formed but invalid
(or no candidate exists), 2 on I/O and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .assembly import Bounds, amalgamate, cut_edge, enumerate_standard
from .errors import GMSplitError
from .model import GraphManifoldSpec, dumps, from_json, validate

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class _InputError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: str
    output_path: str | None = None
    n_max: int = 12
    max_arcs: int = 8
    allow_tubes: bool = True
    json: bool = False
    edge: str | None = None
    candidate: int = 0

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.n_max, self.max_arcs, self.allow_tubes)


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: not JSON ({exc.msg} at line {exc.lineno})") from exc


def _read_spec(path: str) -> GraphManifoldSpec:
    doc = _read_json(path)
    try:
        return from_json(doc)
    except GMSplitError as exc:
        raise _InputError(str(exc)) from exc


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output_path and cfg.command != "cut":
        try:
            Path(cfg.output_path).write_text(text)
        except OSError as exc:
            raise _InputError(f"cannot write {cfg.output_path}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)


def _candidates(cfg: CliConfig, spec: GraphManifoldSpec):
    violations = validate(spec)
    if violations:
        raise GMSplitError("invalid-spec", "; ".join(f"{v.code} at {v.path}" for v in violations))
    return enumerate_standard(spec, cfg.bounds)


def _validate(cfg: CliConfig) -> int:
    spec = _read_spec(cfg.input_path)
    violations = validate(spec)
    report = {"name": spec.name, "ok": not violations, "violations": [v.to_json() for v in violations]}
    if cfg.json:
        _emit(cfg, _dump(report))
    else:
        lines = [f"{spec.name or '<unnamed>'}: {'ok' if not violations else 'invalid'}"]
        lines += [f"  {v.code} at {v.path}: {v.message}" for v in violations]
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if not violations else EXIT_INVALID


def _enumerate(cfg: CliConfig) -> int:
    cands = _candidates(cfg, _read_spec(cfg.input_path))
    report = {"candidates": [c.to_json() for c in cands], "count": len(cands)}
    if cfg.json:
        _emit(cfg, _dump(report))
    else:
        lines = [f"{len(cands)} candidate(s)"]
        for k, c in enumerate(cands):
            pieces = ", ".join(f"{n}={p.tag.value}" for n, p in sorted(c.vertex_pieces.items()))
            edges = ", ".join(f"{n}={p.kind.value}" for n, p in sorted(c.edge_patterns.items()))
            lines.append(f"#{k} genus {c.genus} chi {c.total_chi} tubes {c.tubes}: {pieces}" + (f"; {edges}" if edges else ""))
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _genus(cfg: CliConfig) -> int:
    cands = _candidates(cfg, _read_spec(cfg.input_path))
    if not cands:
        print("error: no candidate splitting within the given bounds", file=sys.stderr)
        return EXIT_INVALID
    best = cands[0]
    if cfg.json:
        _emit(cfg, _dump({"genus": best.genus, "witness": best.to_json()}))
    else:
        pieces = ", ".join(f"{n}={p.tag.value}" for n, p in sorted(best.vertex_pieces.items()))
        edges = ", ".join(f"{n}={p.kind.value}" for n, p in sorted(best.edge_patterns.items()))
        _emit(cfg, f"genus: {best.genus}\nwitness: {pieces}" + (f"; {edges}" if edges else "") + "\n")
    return EXIT_OK


def _cut(cfg: CliConfig) -> int:
    if not cfg.edge:
        raise _InputError("cut needs --edge")
    spec = _read_spec(cfg.input_path)
    violations = validate(spec)
    if violations:
        raise GMSplitError("invalid-spec", "; ".join(f"{v.code} at {v.path}" for v in violations))
    pieces = cut_edge(spec, cfg.edge)
    if not cfg.output_path:
        docs = [json.loads(dumps(p)) for p in pieces]
        sys.stdout.write(_dump(docs))
        return EXIT_OK
    for k, p in enumerate(pieces):
        path = Path(f"{cfg.output_path}-{k}.json")
        try:
            path.write_text(dumps(p) + "\n")
        except OSError as exc:
            raise _InputError(f"cannot write {path}: {exc.strerror or exc}") from exc
        print(path)
    return EXIT_OK


def _amalgamate(cfg: CliConfig) -> int:
    doc = _read_json(cfg.input_path) if not cfg.input_path.lstrip().startswith("[") else None
    if doc is None:
        try:
            doc = json.loads(cfg.input_path)
        except json.JSONDecodeError as exc:
            raise _InputError(f"levels: not JSON ({exc.msg})") from exc
    if not isinstance(doc, list) or not all(
        isinstance(lv, list) and len(lv) in (1, 2) and all(isinstance(x, int) and not isinstance(x, bool) for x in lv)
        for lv in doc
    ):
        raise _InputError("levels must be a list of [chiS, chiF] or [chiS] integer arrays")
    chi, genus = amalgamate(doc)
    if cfg.json:
        _emit(cfg, _dump({"chi": chi, "genus": genus}))
    else:
        _emit(cfg, f"chi: {chi}, genus: {genus}\n")
    return EXIT_OK


def _explain(cfg: CliConfig) -> int:
    cands = _candidates(cfg, _read_spec(cfg.input_path))
    if not 0 <= cfg.candidate < len(cands):
        print(f"error: candidate {cfg.candidate} out of range ({len(cands)} found)", file=sys.stderr)
        return EXIT_INVALID
    c = cands[cfg.candidate]
    rows = c.chi_ledger()
    if cfg.json:
        _emit(cfg, _dump({"chi": c.total_chi, "genus": c.genus, "ledger": [list(r) for r in rows]}))
    else:
        width = max(len(r[0]) for r in rows)
        lines = [f"{where:<{width}}  {what:<18} {chi:>4}" for where, what, chi in rows]
        lines.append(f"{'total':<{width}}  {'':<18} {c.total_chi:>4}  -> genus {c.genus}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {
    "validate": _validate,
    "enumerate": _enumerate,
    "genus": _genus,
    "cut": _cut,
    "amalgamate": _amalgamate,
    "explain": _explain,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gmsplit", description="Heegaard splitting constructions for graph manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "amalgamate":
            p.add_argument("input_path", metavar="LEVELS", help="JSON file, '-' for stdin, or an inline JSON list")
        else:
            p.add_argument("input_path", metavar="SPEC", help="gm-spec/1 JSON file, or '-' for stdin")
        p.add_argument("-o", "--output", dest="output_path")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        if name in ("enumerate", "genus", "explain"):
            p.add_argument("--n-max", type=_positive, default=12)
            p.add_argument("--max-arcs", type=_positive, default=8)
            p.add_argument("--no-tubes", dest="allow_tubes", action="store_false")
        if name == "cut":
            p.add_argument("--edge", required=True)
        if name == "explain":
            p.add_argument("--candidate", type=int, default=0)
    return parser


def config_from_args(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in CliConfig.__dataclass_fields__}
    return CliConfig(**fields)


def run(cfg: CliConfig) -> int:
    try:
        return COMMANDS[cfg.command](cfg)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GMSplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main(argv=None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
