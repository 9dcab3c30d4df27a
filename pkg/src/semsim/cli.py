"""Command-line entry point.

Subcommands: stats, ic, sim, dcs, eval, grid.  The ontology source is
either a WordNet directory (``--wordnet`` or SEMSIM_WORDNET_DIR) or a toy
edge list (``--edgelist``), never both.  Exit status: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import pickle
import sys

from . import bench
from .errors import SemsimError


class UsageError(Exception):
    """Bad invocation that argparse cannot catch itself (exit status 2)."""
from .ic import ICConfig, ICModelId, ic_table, ic_value
from .similarity import SimMeasureId, dcs as dcs_of_pair, word_similarity_detail
from .taxonomy import Taxonomy, freeze
from .wordnet import default_wordnet_dir, parse_edgelist, parse_wordnet

IC_CHOICES = [m.value for m in ICModelId]
MEASURE_CHOICES = [m.value for m in SimMeasureId]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semsim",
        description="Taxonomy-based information content and semantic similarity.")
    parser.add_argument("--wordnet", metavar="DIR",
                        help="WordNet database directory (default: $SEMSIM_WORDNET_DIR)")
    parser.add_argument("--edgelist", metavar="FILE",
                        help="toy ontology edge list instead of WordNet")
    parser.add_argument("--cache", metavar="FILE",
                        help="taxonomy snapshot file, refreshed when sources change")
    parser.add_argument("--zhou-k", type=float, default=0.5,
                        help="depth weight for the zhou model (default 0.5)")
    parser.add_argument("--log-base", type=float, default=10.0,
                        help="base for non-ratio logarithms (default 10)")
    parser.add_argument("--leaf-self", action="store_true",
                        help="count a leaf as its own leaf in the sanchez2011 model")
    parser.add_argument("--normalize-unbounded", action="store_true",
                        help="rescale unbounded IC tables into [0, 1]")
    parser.add_argument("--depth-mode", choices=["min", "max"], default="min",
                        help="node depth convention (default min distance)")
    parser.add_argument("--lcs-mode", choices=["max-depth", "max-ic"], default="max-depth",
                        help="least-common-subsumer rule (default deepest by longest path)")
    parser.add_argument("--format", choices=["text", "json"], default="text",
                        help="output format")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("stats", help="print taxonomy constants")

    p_ic = sub.add_parser("ic", help="print per-sense information content")
    p_ic.add_argument("--model", choices=IC_CHOICES, required=True)
    group = p_ic.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="print IC for every sense of this word")
    group.add_argument("--all", action="store_true", help="dump the full table")

    p_sim = sub.add_parser("sim", help="similarity of two words")
    p_sim.add_argument("--ic", choices=IC_CHOICES, required=True)
    p_sim.add_argument("--measure", choices=MEASURE_CHOICES, required=True)
    p_sim.add_argument("--show-senses", action="store_true",
                       help="also print the best sense pair, plus its DCS under the "
                            "proposed measure")
    p_sim.add_argument("word1")
    p_sim.add_argument("word2")

    p_dcs = sub.add_parser("dcs", help="disjoint common subsumers of two words")
    p_dcs.add_argument("--ic", choices=IC_CHOICES, default="proposed")
    p_dcs.add_argument("--measure", choices=MEASURE_CHOICES, default="proposed")
    p_dcs.add_argument("word1")
    p_dcs.add_argument("word2")

    p_eval = sub.add_parser("eval", help="correlate one model/measure with a benchmark")
    p_eval.add_argument("--dataset", required=True)
    p_eval.add_argument("--ic", choices=IC_CHOICES, required=True)
    p_eval.add_argument("--measure", choices=MEASURE_CHOICES, required=True)
    p_eval.add_argument("--json", metavar="FILE", help="also write the JSON report here")
    p_eval.add_argument("--per-pair", action="store_true",
                        help="print every pair's machine and human score")

    p_grid = sub.add_parser("grid", help="run a model x measure grid over a benchmark")
    p_grid.add_argument("--dataset", required=True)
    p_grid.add_argument("--full", action="store_true",
                        help="run the complete benchmark grid")
    p_grid.add_argument("--combos", metavar="IC:MEASURE,...",
                        help="comma-separated ic:measure pairs")
    p_grid.add_argument("--json", metavar="FILE", help="also write the JSON report here")
    p_grid.add_argument("--golden", metavar="FILE",
                        help="JSON list of expected correlations; exit 1 on any miss")
    p_grid.add_argument("--literature", action="store_true",
                        help="append reported (not computed) literature correlations")
    return parser


def _ic_config(args) -> ICConfig:
    return ICConfig(zhou_k=args.zhou_k, log_base_absolute=args.log_base,
                    leaf_self=args.leaf_self,
                    normalize_unbounded=args.normalize_unbounded)


def _source_fingerprint(paths, depth_mode: str) -> str:
    digest = hashlib.sha256()
    digest.update(depth_mode.encode())
    for p in paths:
        digest.update(b"\0")
        with open(p, "rb") as fh:
            for chunk in iter(lambda: fh.read(1 << 20), b""):
                digest.update(chunk)
    return digest.hexdigest()


def load_taxonomy(args) -> Taxonomy:
    if args.wordnet and args.edgelist:
        raise UsageError("specify either --wordnet or --edgelist, not both")
    if args.edgelist:
        raw = parse_edgelist(args.edgelist)
        return freeze(raw, depth_mode=args.depth_mode)

    wn_dir = args.wordnet or default_wordnet_dir()
    if not wn_dir:
        raise UsageError("no ontology source (use --wordnet/--edgelist or set "
                         "SEMSIM_WORDNET_DIR)")
    sources = [os.path.join(wn_dir, "data.noun"), os.path.join(wn_dir, "index.noun")]
    fingerprint = None
    if args.cache:
        try:
            fingerprint = _source_fingerprint(sources, args.depth_mode)
            with open(args.cache, "rb") as fh:
                snapshot = pickle.load(fh)
            if snapshot.get("fingerprint") == fingerprint:
                return snapshot["taxonomy"]
        except (OSError, pickle.PickleError, KeyError, EOFError):
            pass
    raw, word_index = parse_wordnet(wn_dir)
    taxonomy = freeze(raw, depth_mode=args.depth_mode, word_index=word_index)
    if args.cache and fingerprint is not None:
        try:
            with open(args.cache, "wb") as fh:
                pickle.dump({"fingerprint": fingerprint, "taxonomy": taxonomy}, fh,
                            protocol=pickle.HIGHEST_PROTOCOL)
        except OSError:
            pass  # cache is best effort
    return taxonomy


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_stats(args) -> int:
    t = load_taxonomy(args)
    c = t.constants
    if args.format == "json":
        _emit_json({"schema": bench.JSON_SCHEMA_VERSION, "root": t.root,
                    "node_max": c.node_max, "deep_max": c.deep_max,
                    "leaves_max": c.leaves_max})
    else:
        print(f"root: {t.root}")
        print(f"node_max: {c.node_max}")
        print(f"deep_max: {c.deep_max}")
        print(f"leaves_max: {c.leaves_max}")
    return 0


def cmd_ic(args) -> int:
    t = load_taxonomy(args)
    cfg = _ic_config(args)
    model = ICModelId(args.model)
    if args.all:
        table = ic_table(t, model, cfg)
        rows = [(sid, t.nodes[sid].lemmas, table[sid]) for sid in sorted(t.nodes)]
    else:
        sense_ids = t.senses(args.word)
        if not sense_ids:
            raise SemsimError(f"word has no noun sense: {args.word!r}")
        rows = [(sid, t.nodes[sid].lemmas, ic_value(t, model, sid, cfg))
                for sid in sense_ids]
    if args.format == "json":
        _emit_json({"schema": bench.JSON_SCHEMA_VERSION, "model": model.value,
                    "senses": [{"synset": sid, "lemmas": list(lem), "ic": round(v, 3)}
                               for sid, lem, v in rows]})
    else:
        for sid, lem, v in rows:
            print(f"{sid}\t{','.join(lem)}\t{v:.3f}")
    return 0


def cmd_sim(args) -> int:
    t = load_taxonomy(args)
    cfg = _ic_config(args)
    table = ic_table(t, ICModelId(args.ic), cfg)
    measure = SimMeasureId(args.measure)
    lcs_mode = args.lcs_mode.replace("-", "_")
    score, (sa, sb) = word_similarity_detail(t, table, measure,
                                             args.word1, args.word2, lcs_mode)
    if args.format == "json":
        obj = {"schema": bench.JSON_SCHEMA_VERSION, "word1": args.word1,
               "word2": args.word2, "ic_model": args.ic, "measure": args.measure,
               "similarity": round(score, 3)}
        if args.show_senses:
            obj["senses"] = [sa, sb]
            if measure is SimMeasureId.PROPOSED:
                obj["dcs"] = list(dcs_of_pair(t, sa, sb).members)
        _emit_json(obj)
        return 0
    print(f"{score:.3f}")
    if args.show_senses:
        print(f"senses: {sa} ({','.join(t.nodes[sa].lemmas)})"
              f" x {sb} ({','.join(t.nodes[sb].lemmas)})")
        if measure is SimMeasureId.PROPOSED:
            members = dcs_of_pair(t, sa, sb).members
            print("dcs: " + " ".join(members))
    return 0


def cmd_dcs(args) -> int:
    t = load_taxonomy(args)
    cfg = _ic_config(args)
    table = ic_table(t, ICModelId(args.ic), cfg)
    lcs_mode = args.lcs_mode.replace("-", "_")
    _, (sa, sb) = word_similarity_detail(t, table, SimMeasureId(args.measure),
                                         args.word1, args.word2, lcs_mode)
    members = dcs_of_pair(t, sa, sb).members
    if args.format == "json":
        _emit_json({"schema": bench.JSON_SCHEMA_VERSION, "word1": args.word1,
                    "word2": args.word2, "senses": [sa, sb], "dcs": list(members)})
    else:
        print(f"senses: {sa} x {sb}")
        for m in members:
            print(f"{m}\t{','.join(t.nodes[m].lemmas)}\tdepth={t.stats[m].depth}")
    return 0


def cmd_eval(args) -> int:
    t = load_taxonomy(args)
    cfg = _ic_config(args)
    dataset = bench.load_dataset(args.dataset)
    lcs_mode = args.lcs_mode.replace("-", "_")
    result = bench.evaluate(t, dataset, ICModelId(args.ic), SimMeasureId(args.measure),
                            cfg, lcs_mode)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(result.to_json_obj(), indent=2, sort_keys=True) + "\n")
    if args.format == "json":
        _emit_json(result.to_json_obj())
        return 0
    print(f"dataset: {result.dataset}")
    print(f"ic_model: {result.ic_model}")
    print(f"measure: {result.measure}")
    print(f"n_used: {result.n_used}")
    if args.per_pair:
        for p in result.per_pair:
            machine = "skipped" if p.machine is None else f"{p.machine:.3f}"
            print(f"{p.word1}\t{p.word2}\t{machine}\t{p.human}")
    print(f"pearson: {result.pearson:.2f}")
    return 0


def _parse_combos(text: str):
    combos = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            model, measure = chunk.split(":")
            combos.append((ICModelId(model.strip()), SimMeasureId(measure.strip())))
        except ValueError:
            raise SemsimError(f"bad combo {chunk!r}, expected ic:measure") from None
    return combos


def cmd_grid(args) -> int:
    if not args.full and not args.combos:
        raise UsageError("grid: pass --full or --combos")
    t = load_taxonomy(args)
    cfg = _ic_config(args)
    dataset = bench.load_dataset(args.dataset)
    combos = list(bench.FULL_GRID) if args.full else _parse_combos(args.combos)
    lcs_mode = args.lcs_mode.replace("-", "_")
    report = bench.grid_report(t, dataset, combos, cfg, lcs_mode,
                               with_literature=args.literature)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    if args.format == "json":
        print(report.to_json(), end="")
    else:
        print(report.to_tsv(), end="")
    if args.golden:
        with open(args.golden, "r", encoding="utf-8") as fh:
            expectations = json.load(fh)
        computed = {(str(r.ic_model), str(r.measure)): r.pearson for r in report.results}
        failures = 0
        for want in expectations:
            key = (want["ic_model"], want["measure"])
            tol = want.get("tol", 0.0)
            got = computed.get(key)
            if got is None or abs(got - want["pearson"]) > tol + 1e-12:
                failures += 1
                print(f"golden miss: {key[0]}:{key[1]} expected "
                      f"{want['pearson']:.2f}+-{tol:.2f}, got "
                      f"{'absent' if got is None else format(got, '.2f')}",
                      file=sys.stderr)
        if failures:
            return 1
    return 0


_COMMANDS = {
    "stats": cmd_stats,
    "ic": cmd_ic,
    "sim": cmd_sim,
    "dcs": cmd_dcs,
    "eval": cmd_eval,
    "grid": cmd_grid,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"semsim: error: {exc}", file=sys.stderr)
        return 2
    except SemsimError as exc:
        print(f"semsim: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
