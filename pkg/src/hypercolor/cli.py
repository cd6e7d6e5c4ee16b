"""Command line: ``hypercolor gen|solve|verify|decode|principles``.

Every command prints one JSON run report on stdout::

    {"command": [...], "inputs": {name: sha256}, "outcome": {...}, "wall_time": seconds}

Diagnostics go to stderr.  Exit codes: 0 success; 1 ``Uncolorable`` or a
failing edge; 2 ``DepthExhausted`` or a window too small; 3 bad input.

``HYPERCOLOR_SEED`` is reserved for randomized corpus generation and is
not read by any current command.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

import click

from . import conversions, principles
from .colorings import Coloring, Mode, verify
from .errors import HypercolorError, WindowTooSmall
from .gadgets import (
    Injection,
    TreeSpec,
    coloring_to_path,
    k_extension,
    matryoshka,
    thm3_decode,
    thm3_gadget,
    thm4_decode,
    thm4_gadget,
    thm6_decode,
    thm6_gadget,
    thm7_decode,
    thm7_strong2_gadget,
    thm7_strong3_gadget,
    tree_from_meta,
    tree_gadget,
)
from .serialize import ParseError, coloring_from_json, dumps, hypergraph_from_json, hypergraph_to_json
from .solver import Colored, DepthExhausted, solve

EXIT_OK, EXIT_NEGATIVE, EXIT_PARTIAL, EXIT_INPUT = 0, 1, 2, 3


@dataclass
class RunReport:
    command: list
    inputs: dict = field(default_factory=dict)
    outcome: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "outcome": self.outcome, "wall_time": self.wall_time}


class _Run:
    """Collects input digests and times the command body."""

    def __init__(self, ctx: click.Context):
        argv = (ctx.find_object(dict) or {}).get("argv") or []
        self.report = RunReport(["hypercolor", *argv])
        self.start = time.perf_counter()

    def digest(self, name: str, data: bytes) -> None:
        self.report.inputs[name] = hashlib.sha256(data).hexdigest()

    def finish(self, outcome: dict, code: int = EXIT_OK):
        self.report.outcome = outcome
        self.report.wall_time = round(time.perf_counter() - self.start, 6)
        click.echo(dumps(self.report.to_json()))
        sys.exit(code)


def _warn(msg: str) -> None:
    click.echo(f"warning: {msg}", err=True)


def _read_json(run: _Run, name: str, path: str):
    with open(path, "rb") as fh:
        data = fh.read()
    run.digest(name, data)
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma-separated naturals, got {text!r}") from exc


def _injection(run: _Run, name: str, inline: Optional[str], path: Optional[str]) -> Optional[Injection]:
    if inline is not None and path is not None:
        _warn(f"both inline and file given for {name}; using the inline value")
    if inline is not None:
        run.digest(name, inline.encode())
        return Injection(_ints(inline))
    if path is not None:
        return Injection(tuple(_read_json(run, name, path)))
    return None


def _tree(run: _Run, nodes: Optional[str], branches: tuple[str, ...], path: Optional[str]) -> TreeSpec:
    inline = nodes is not None or bool(branches)
    if inline and path is not None:
        _warn("both inline tree and --tree-file given; using the inline tree")
    if inline:
        text = f"{nodes or ''}|{';'.join(branches)}"
        run.digest("tree", text.encode())
        node_list = [_ints(n) for n in (nodes or "").split(";") if n.strip()]
        return TreeSpec.build(node_list, [_ints(b) for b in branches])
    if path is not None:
        d = _read_json(run, "tree", path)
        return TreeSpec.build(d.get("nodes", []), d.get("branches", []))
    return TreeSpec.build([])


def _load_graph(run: _Run, path: str):
    return hypergraph_from_json(_read_json(run, "hypergraph", path))


def _load_coloring(run: _Run, path: str) -> Coloring:
    return coloring_from_json(_read_json(run, "coloring", path))


def _need(value, what: str):
    if value is None:
        raise click.UsageError(f"missing {what}")
    return value


@click.group()
def cli():
    """Hypergraph coloring workbench."""


@cli.command()
@click.argument("gadget", type=click.Choice(["thm3", "thm4", "thm6", "thm7-strong3", "thm7-strong2", "tree", "matryoshka"]))
@click.option("--inj", help="First injection, e.g. 4,2 (g for thm3/thm4, f otherwise).")
@click.option("--inj-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--inj2", help="Second injection (g for thm7).")
@click.option("--inj2-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--n-max", type=int, help="thm6: decode below this value.")
@click.option("--n-edges", type=int, help="thm4: number of edges.")
@click.option("--window", type=int, help="thm7 and matryoshka window.")
@click.option("--nodes", help="Tree nodes, e.g. '0;0,0;1'.")
@click.option("--branch", multiple=True, help="Stem of a designated 0-extended branch, e.g. '0,0'.")
@click.option("--tree-file", type=click.Path(exists=True, dir_okay=False))
@click.option("--depth", type=int, help="Tree truncation depth.")
@click.option("--extend", type=int, help="Apply the k-color extension with this k.")
@click.option("--as-seq", is_flag=True, help="Convert bounded characteristic functions to codes.")
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Also write the hypergraph JSON here.")
@click.pass_context
def gen(ctx, gadget, inj, inj_file, inj2, inj2_file, n_max, n_edges, window, nodes, branch, tree_file, depth, extend, as_seq, out):
    """Generate a gadget hypergraph."""
    run = _Run(ctx)
    f = _injection(run, "inj", inj, inj_file)
    g = _injection(run, "inj2", inj2, inj2_file)
    if gadget == "thm3":
        h = thm3_gadget(_need(f, "--inj"))
    elif gadget == "thm4":
        h = thm4_gadget(_need(f, "--inj"), n_edges)
    elif gadget == "thm6":
        f = _need(f, "--inj")
        h = thm6_gadget(f, n_max if n_max is not None else max(f.values, default=-1) + 1)
    elif gadget == "thm7-strong3":
        h = thm7_strong3_gadget(_need(f, "--inj"), _need(g, "--inj2"), window)
    elif gadget == "thm7-strong2":
        h = thm7_strong2_gadget(_need(f, "--inj"), _need(g, "--inj2"), window)
    elif gadget == "tree":
        h = tree_gadget(_tree(run, nodes, branch, tree_file), depth)
    else:
        h = matryoshka(_need(window, "--window"))
    if as_seq:
        h = conversions.bounded_to_seq(h)
    if extend is not None:
        h = k_extension(h, extend)
    doc = hypergraph_to_json(h)
    if out:
        with open(out, "w") as fh:
            fh.write(dumps(doc) + "\n")
    run.finish(doc)


_MODES = click.Choice([m.value for m in Mode])


@cli.command("solve")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("-k", "k", type=int, required=True, help="Number of colors.")
@click.option("--mode", type=_MODES, default="proper", show_default=True)
@click.option("--max-level", type=int)
@click.option("--coloring-out", type=click.Path(dir_okay=False), help="Write the coloring JSON here when found.")
@click.pass_context
def solve_cmd(ctx, graph, k, mode, max_level, coloring_out):
    """Search the tree of partial colorings."""
    run = _Run(ctx)
    h = _load_graph(run, graph)
    result = solve(h, k, Mode(mode), max_level)
    if isinstance(result, Colored) and coloring_out:
        with open(coloring_out, "w") as fh:
            fh.write(dumps(result.to_json()["coloring"]) + "\n")
    code = EXIT_OK if isinstance(result, Colored) else EXIT_PARTIAL if isinstance(result, DepthExhausted) else EXIT_NEGATIVE
    run.finish(result.to_json(), code)


@cli.command("verify")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.argument("coloring", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=_MODES, default="proper", show_default=True)
@click.pass_context
def verify_cmd(ctx, graph, coloring, mode):
    """Check a coloring edge by edge."""
    run = _Run(ctx)
    rep = verify(_load_graph(run, graph), _load_coloring(run, coloring), Mode(mode))
    run.finish(rep.to_json(), EXIT_OK if rep.ok else EXIT_NEGATIVE)


@cli.command()
@click.argument("gadget", type=click.Choice(["thm3", "thm4", "thm6", "thm7", "tree"]))
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--coloring", type=click.Path(exists=True, dir_okay=False))
@click.option("--m", "query", type=int, help="thm3/thm4: single value to test.")
@click.option("--depth", type=int, help="tree: path length to extract.")
@click.pass_context
def decode(ctx, gadget, graph, coloring, query, depth):
    """Read a set or path back out of a gadget."""
    run = _Run(ctx)
    h = _load_graph(run, graph)
    if gadget == "thm3":
        edges = h.finite_edges()
        if query is not None:
            run.finish({"m": query, "member": thm3_decode(edges, query)})
        top = max((e[-1] for e in edges if e), default=0)
        run.finish({"range": sorted(m for m in range(top) if thm3_decode(edges, m))})
    if gadget == "thm4":
        codes = [set(e) for e in h.finite_edges()]
        if query is not None:
            run.finish({"y": query, "member": thm4_decode(codes, query)})
        top = len(codes)
        run.finish({"range": sorted(y for y in range(top) if thm4_decode(codes, y))})
    c = _load_coloring(run, _need(coloring, "--coloring"))
    if gadget == "thm6":
        run.finish({"set": sorted(thm6_decode(h, c))})
    if gadget == "thm7":
        run.finish({"set": sorted(thm7_decode(h, c))})
    path = coloring_to_path(tree_from_meta(h), c, depth if depth is not None else h.meta.get("depth"))
    run.finish({"path": [list(s) for s in path]})


@cli.command("principles")
@click.argument("sub", type=click.Choice(["ert", "ect", "bridge", "srt-demo"]))
@click.option("--coloring", type=click.Path(exists=True, dir_okay=False))
@click.option("--prefix", help="Inline prefix, e.g. 0,1.")
@click.option("--period", help="Inline period, e.g. 1.")
@click.option("-k", "k", type=int, help="Number of colors for an inline coloring.")
@click.option("--window", type=int, default=24, show_default=True)
@click.pass_context
def principles_cmd(ctx, sub, coloring, prefix, period, k, window):
    """Witnesses for the repeating-tails principles."""
    run = _Run(ctx)
    inline = prefix is not None or period is not None
    if inline and coloring is not None:
        _warn("both inline coloring and --coloring given; using the inline coloring")
    if inline:
        pre, per = _ints(prefix or ""), _ints(period or "")
        run.digest("coloring", f"{k}|{prefix}|{period}".encode())
        f = Coloring(k if k is not None else max(pre + per, default=-1) + 1, pre, per)
    else:
        f = _load_coloring(run, _need(coloring, "--coloring or --prefix/--period"))
    if sub == "ert":
        run.finish({"b": principles.ert_witness(f)})
    if sub == "ect":
        run.finish({"b": principles.ect_witness(f)})
    if sub == "bridge":
        run.finish(principles.cf_ert_bridge(f, window).to_json())
    size = principles.refutation_size(max(principles.n_colors(f), 1))
    if window < size:
        raise WindowTooSmall(f"window {window} holds no set of {size} elements")
    outcome = {
        "size": size,
        "one_homogeneous": principles.mono_set_search(f, window, size, 1),
        "refutation": principles.halving_refute(f, range(size)).to_json(),
        "ert_via_srt": principles.ert_via_srt(f, window),
    }
    run.finish(outcome)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cli.main(args=argv, prog_name="hypercolor", standalone_mode=False, obj={"argv": argv})
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except click.exceptions.Abort:
        return EXIT_INPUT
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except WindowTooSmall as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_PARTIAL
    except (HypercolorError, ValueError, KeyError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
