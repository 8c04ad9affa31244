"""Command-line interface: batch validation, statistics, agreement,
adjudication, hierarchy collapse, baseline tagging, and the HTTP service.

Every subcommand is a pure pipeline over its input files: outputs go only to
``--out`` targets or stdout. Exit status is 0 on success, 1 on validation
findings (warnings escalate with ``--strict``), 2 on usage errors.

A corpus is named by a path prefix: ``--corpus work/pilot`` reads
``work/pilot.docs.tsv`` and ``work/pilot.anno.tsv`` (passing either file's
full path works too). ``CONSTRUAL_DATA_DIR`` overrides the bundled fixture
root used for defaults.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from construal import data_files
from construal.agreement import disagreement_queue, pairwise_agreement
from construal.agreement import adjudicate as adjudicate_records
from construal.core import parse_construal, validate_construal
from construal.corpus import (
    apply_revision_to_corpus,
    compute_stats,
    load_corpus,
    load_documents,
    serialize_annotations,
)
from construal.exceptions import ConstrualError
from construal.hierarchy import apply_revision, load_hierarchy, load_revision, serialize_hierarchy
from construal.lexicon import load_lexicon
from construal.tagger import evaluate as evaluate_model
from construal.tagger import tag_targets, train

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Usage-level problem: missing file, bad flag combination."""


def corpus_pair(prefix: str) -> tuple[Path, Path]:
    """Resolve a corpus prefix (or either member file) to its docs/anno pair."""
    text = str(prefix)
    if text.endswith(".docs.tsv") or text.endswith(".anno.tsv"):
        text = text[: -len(".docs.tsv")]
    return Path(text + ".docs.tsv"), Path(text + ".anno.tsv")


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_context(args: argparse.Namespace, need_lexicon: bool = True):
    hierarchy_file = Path(args.hierarchy) if args.hierarchy else data_files.hierarchy_path()
    hierarchy = load_hierarchy(_read(hierarchy_file))
    lexicon = None
    if need_lexicon:
        lexicon_file = Path(args.lexicon) if args.lexicon else data_files.lexicon_path()
        lexicon = load_lexicon(_read(lexicon_file), hierarchy)
    return hierarchy, lexicon


def _load_corpora(args: argparse.Namespace, hierarchy, lexicon):
    """Load every --corpus pair (bundled corpus when none given)."""
    prefixes = args.corpus or [str(data_files.docs_path())[: -len(".docs.tsv")]]
    documents: dict = {}
    records: list = []
    warnings: list[str] = []
    for prefix in prefixes:
        docs_path, anno_path = corpus_pair(prefix)
        docs, recs, warns = load_corpus(
            _read(docs_path), _read(anno_path), hierarchy, lexicon
        )
        overlap = set(docs) & set(documents)
        if overlap:
            raise ConstrualError(f"duplicate doc ids across corpora: {sorted(overlap)}")
        documents.update(docs)
        records.extend(recs)
        warnings.extend(f"{anno_path}: {w}" for w in warns)
    return documents, records, warnings


def _report_warnings(warnings: Sequence[str], strict: bool) -> int:
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if warnings and strict:
        return EXIT_FINDINGS
    return EXIT_OK


# -- subcommands -----------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    # the bundled lexicon matches the bundled hierarchy; when a custom
    # hierarchy is supplied, a lexicon is only checked if explicitly named
    need_lexicon = bool(args.lexicon) or not args.hierarchy
    hierarchy, lexicon = _load_context(args, need_lexicon=need_lexicon)
    print(f"{len(hierarchy)} labels, {len(hierarchy.roots)} roots")
    warnings: list[str] = []
    if lexicon is not None:
        print(f"{len(lexicon)} lexicon entries")
        warnings.extend(lexicon.warnings)
    if args.corpus:
        documents, records, corpus_warnings = _load_corpora(args, hierarchy, lexicon)
        warnings.extend(corpus_warnings)
        print(f"{len(records)} records across {len(documents)} documents")
    return _report_warnings(warnings, args.strict)


def cmd_stats(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args)
    _, records, warnings = _load_corpora(args, hierarchy, lexicon)
    stats = compute_stats(records, hierarchy)
    lines: list[tuple[str, str]] = [
        ("tokens_annotated", str(stats.tokens_annotated)),
        ("mismatch_rate", f"{stats.mismatch_rate:.6f}"),
        ("null_function_rate", f"{stats.null_function_rate:.6f}"),
        ("role_only_labels", ", ".join(stats.role_only_labels)),
        ("function_only_labels", ", ".join(stats.function_only_labels)),
    ]
    lines += [
        (f"role:{label}", str(count))
        for label, count in stats.label_histogram["role"].items()
    ]
    lines += [
        (f"function:{label}", str(count))
        for label, count in stats.label_histogram["function"].items()
    ]
    _write_out(_format_table(lines, args.tsv), args.out)
    return _report_warnings(warnings, args.strict)


def cmd_agree(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args)
    _, records, warnings = _load_corpora(args, hierarchy, lexicon)
    annotators = args.annotators
    if not annotators:
        annotators = sorted({r.annotator for r in records if not r.is_gold})
        if len(annotators) != 2:
            raise CliError(
                f"--annotators required: corpus has {len(annotators)} non-gold annotators"
            )
    report = pairwise_agreement(records, annotators[0], annotators[1], hierarchy)
    lines = [
        ("n_items", str(report.n_items)),
        ("exact_construal", f"{report.exact_construal:.6f}"),
        ("role_agreement", f"{report.role_agreement:.6f}"),
        ("function_agreement", f"{report.function_agreement:.6f}"),
        ("kappa_role", f"{report.kappa_role:.6f}"),
        ("kappa_function", f"{report.kappa_function:.6f}"),
        ("kappa_construal", f"{report.kappa_construal:.6f}"),
        ("soft_role", f"{report.soft_role:.6f}"),
        ("disagreements", str(len(report.disagreements))),
    ]
    for metric in ("role", "function", "construal"):
        if getattr(report, f"kappa_{metric}_degenerate"):
            lines.append((f"kappa_{metric}_degenerate", "true"))
    _write_out(_format_table(lines, args.tsv), args.out)
    return _report_warnings(warnings, args.strict)


def cmd_queue(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args)
    _, records, warnings = _load_corpora(args, hierarchy, lexicon)
    rows = []
    for item in disagreement_queue(records):
        doc_id, sent_id, start, end = item.target
        sides = "; ".join(f"{annotator}={c.notation()}" for annotator, c in item.annotations)
        rows.append((f"{doc_id}:{sent_id}:{start}-{end}", f"{item.form}\t{sides}" if args.tsv
                     else f"{item.form}  {sides}"))
    _write_out(_format_table(rows, args.tsv), args.out)
    return _report_warnings(warnings, args.strict)


def cmd_adjudicate(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args)
    _, records, warnings = _load_corpora(args, hierarchy, lexicon)
    try:
        doc_id, sent_id, span = args.target.rsplit(":", 2)
        start_s, end_s = span.split("-")
        target = (doc_id, sent_id, int(start_s), int(end_s))
    except ValueError:
        raise CliError(f"bad --target {args.target!r}; expected doc:sent:start-end") from None
    chosen = validate_construal(hierarchy, parse_construal(args.construal))
    updated = adjudicate_records(
        records, target, chosen, args.expert, force=args.force, hierarchy=hierarchy
    )
    _write_out(serialize_annotations(updated), args.out)
    return _report_warnings(warnings, args.strict)


def cmd_collapse(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args, need_lexicon=bool(args.corpus))
    revision_file = Path(args.revision) if args.revision else data_files.revision_path()
    revision = load_revision(_read(revision_file))
    revised = apply_revision(hierarchy, revision)
    _write_out(serialize_hierarchy(revised), args.out)
    warnings: list[str] = []
    if args.corpus:
        _, records, warnings = _load_corpora(args, hierarchy, lexicon)
        revised_records = apply_revision_to_corpus(records, revision)
        if not args.out_corpus:
            raise CliError("--out-corpus is required when collapsing a corpus")
        _write_out(serialize_annotations(revised_records), args.out_corpus)
    return _report_warnings(warnings, args.strict)


def cmd_tag(args: argparse.Namespace) -> int:
    hierarchy, lexicon = _load_context(args)
    documents, records, warnings = _load_corpora(args, hierarchy, lexicon)
    model = train(records, documents, lexicon)
    if args.documents and args.targets:
        target_docs = data_files.load_targets(Path(args.targets))
        tag_documents = load_documents(_read(Path(args.documents)))
        tagged = tag_targets(model, tag_documents, target_docs)
        _write_out(serialize_annotations(tagged), args.out)
    elif args.documents or args.targets:
        raise CliError("--documents and --targets must be given together")
    if args.eval_corpus:
        docs_path, anno_path = corpus_pair(args.eval_corpus)
        eval_docs, eval_records, _ = load_corpus(
            _read(docs_path), _read(anno_path), hierarchy, lexicon
        )
        exact, role, function = evaluate_model(model, eval_records, eval_docs)
        print(f"exact\t{exact:.6f}")
        print(f"role\t{role:.6f}")
        print(f"function\t{function:.6f}")
    return _report_warnings(warnings, args.strict)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from construal.service import CorpusStore, create_app

    hierarchy, lexicon = _load_context(args)
    if args.corpus:
        documents, records, _ = _load_corpora(args, hierarchy, lexicon)
        targets = [(r.doc_id, r.sent_id, r.start, r.end, r.form) for r in records]
    else:
        documents = load_documents(_read(data_files.docs_path()))
        records = []
        targets = data_files.load_targets(data_files.targets_path())
    store = CorpusStore(
        hierarchy,
        lexicon,
        documents,
        targets,
        log_path=args.log,
        seed_records=records,
    )
    app = create_app(store)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def _format_table(rows: Sequence[tuple[str, str]], tsv: bool) -> str:
    if not rows:
        return ""
    if tsv:
        return "".join(f"{key}\t{value}\n" for key, value in rows)
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="construal",
        description="Adposition supersense construal toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--hierarchy", metavar="PATH", help="hierarchy file (default: bundled)")
    common.add_argument("--lexicon", metavar="PATH", help="lexicon file (default: bundled)")
    common.add_argument(
        "--corpus",
        metavar="PATH",
        action="append",
        help="corpus prefix or .docs/.anno path; repeatable",
    )
    common.add_argument("--revision", metavar="PATH", help="revision file (default: bundled)")
    common.add_argument("--out", metavar="PATH", help="output path (default: stdout)")
    common.add_argument("--strict", action="store_true", help="treat warnings as findings")
    common.add_argument("--tsv", action="store_true", help="machine-readable TSV output")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="validate hierarchy, lexicon, corpora")
    sub.add_parser("stats", parents=[common], help="corpus statistics over gold records")

    agree = sub.add_parser("agree", parents=[common], help="pairwise inter-annotator agreement")
    agree.add_argument("--annotators", nargs=2, metavar=("A", "B"), help="annotator ids")

    sub.add_parser("queue", parents=[common], help="list targets needing adjudication")

    adj = sub.add_parser("adjudicate", parents=[common], help="write a gold record")
    adj.add_argument("--target", required=True, metavar="DOC:SENT:START-END")
    adj.add_argument("--construal", required=True, metavar="NOTATION")
    adj.add_argument("--expert", required=True, metavar="ID")
    adj.add_argument("--force", action="store_true", help="replace an existing gold record")

    collapse = sub.add_parser("collapse", parents=[common], help="apply a hierarchy revision")
    collapse.add_argument("--out-corpus", metavar="PATH", help="revised annotations output")

    tag = sub.add_parser("tag", parents=[common], help="most-frequent-sense baseline")
    tag.add_argument("--documents", metavar="PATH", help="documents TSV to tag")
    tag.add_argument("--targets", metavar="PATH", help="targets TSV to tag")
    tag.add_argument("--eval-corpus", metavar="PATH", help="gold corpus to evaluate against")

    serve = sub.add_parser("serve", parents=[common], help="run the annotation service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8570)
    serve.add_argument("--log", metavar="PATH", help="append-log path for durability")

    return parser


COMMANDS = {
    "validate": cmd_validate,
    "stats": cmd_stats,
    "agree": cmd_agree,
    "queue": cmd_queue,
    "adjudicate": cmd_adjudicate,
    "collapse": cmd_collapse,
    "tag": cmd_tag,
    "serve": cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstrualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FINDINGS


if __name__ == "__main__":
    sys.exit(main())
