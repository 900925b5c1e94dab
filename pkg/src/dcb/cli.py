"""Command-line front end: extract, eval, tag, and chunk subcommands.

All diagnostics go to standard error and the exit status is nonzero on
any failure; data output goes to files (written atomically) or standard
output, and two runs with identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .errors import DcbError
from .evaluation import aggregate, compare, format_table, machine_lines
from .ingest import load_document, split_sentences, tokenize
from .model import from_xml, to_plantuml, to_xml
from .ontology import LENIENT, STRICT, load_ontology
from .pipeline import analyze_document, extract_document
from .rules import RuleConfig
from .tagger import default_lexicon, load_lexicon, tag


class MissingGoldError(DcbError):
    """Raised when a corpus document has no matching gold model file."""

    def __init__(self, stem: str, gold_dir: str):
        super().__init__(f"no gold model {stem}.xml in {gold_dir}")
        self.stem = stem


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcb",
        description="Extract an initial UML class model from English requirements text.",
    )
    parser.add_argument("--version", action="version", version=f"dcb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="extract class models from text files")
    extract.add_argument("files", nargs="+", help="requirements text files (.txt)")
    _add_extraction_flags(extract)
    extract.add_argument(
        "--format",
        choices=("xml", "plantuml", "both"),
        default="xml",
        help="output serialization (default: xml)",
    )
    extract.add_argument("--out", default="", help="output directory (default: current directory)")
    extract.add_argument(
        "--trace",
        action="store_true",
        help="log rule firings and element provenance to standard error",
    )
    extract.set_defaults(func=cmd_extract)

    evaluate = sub.add_parser("eval", help="score extraction against gold models")
    evaluate.add_argument("--docs", required=True, help="directory of .txt documents")
    evaluate.add_argument("--gold", required=True, help="directory of gold .xml models")
    _add_extraction_flags(evaluate)
    evaluate.add_argument(
        "--strict-labels",
        action="store_true",
        help="require relationship labels to match exactly",
    )
    evaluate.add_argument("--report", default="", help="also write aggregate metrics to this file")
    evaluate.set_defaults(func=cmd_eval)

    tag_cmd = sub.add_parser("tag", help="print tagged tokens, one per line")
    tag_cmd.add_argument("file")
    tag_cmd.add_argument("--lexicon", default="", help="extra lexicon entries (word TAG lines)")
    tag_cmd.set_defaults(func=cmd_tag)

    chunk_cmd = sub.add_parser("chunk", help="print phrases and clauses, one per line")
    chunk_cmd.add_argument("file")
    chunk_cmd.add_argument("--lexicon", default="", help="extra lexicon entries (word TAG lines)")
    chunk_cmd.set_defaults(func=cmd_chunk)

    return parser


def _add_extraction_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--ontology", default="", help="domain ontology file")
    sub.add_argument(
        "--mode",
        choices=(STRICT, LENIENT),
        default=LENIENT,
        help="ontology refinement mode (default: lenient)",
    )
    sub.add_argument("--lexicon", default="", help="extra lexicon entries (word TAG lines)")
    sub.add_argument("--rules", default="", help="extra rule-config word lists")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DcbError, FileNotFoundError, OSError) as exc:
        print(f"dcb: {exc}", file=sys.stderr)
        return 1


def _extraction_inputs(args):
    lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
    rule_config = RuleConfig.from_file(args.rules) if args.rules else None
    ontology = load_ontology(args.ontology) if args.ontology else None
    return lexicon, rule_config, ontology


def _trace_rule(rule_id: str, sentence_index: int, snippet: str, result: str) -> None:
    print(f"RULE\t{rule_id}\t{sentence_index}\t{snippet}\t{result}", file=sys.stderr)


def _trace_elements(final) -> None:
    for cls in final.classes:
        print(f"ELEMENT\tclass\t{cls.name}\t{','.join(cls.provenance)}", file=sys.stderr)
        for attr in cls.attributes:
            print(
                f"ELEMENT\tattribute\t{cls.name}.{attr.name}\t{','.join(attr.provenance)}",
                file=sys.stderr,
            )
    for rel in final.relationships:
        print(
            f"ELEMENT\t{rel.kind}\t{rel.source}->{rel.target}\t{','.join(rel.provenance)}",
            file=sys.stderr,
        )


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def cmd_extract(args) -> int:
    lexicon, rule_config, ontology = _extraction_inputs(args)
    out_dir = Path(args.out) if args.out else Path.cwd()
    for file_path in args.files:
        doc = load_document(file_path)
        _, final = extract_document(
            doc,
            lexicon=lexicon,
            rule_config=rule_config,
            ontology=ontology,
            mode=args.mode,
            on_fire=_trace_rule if args.trace else None,
            generator=f"dcb {__version__}",
        )
        if args.trace:
            _trace_elements(final)
        if args.format in ("xml", "both"):
            _atomic_write(out_dir / f"{doc.id}.xml", to_xml(final))
        if args.format in ("plantuml", "both"):
            _atomic_write(out_dir / f"{doc.id}.puml", to_plantuml(final))
    return 0


def cmd_eval(args) -> int:
    lexicon, rule_config, ontology = _extraction_inputs(args)
    docs_dir, gold_dir = Path(args.docs), Path(args.gold)
    reports = []
    for doc_path in sorted(docs_dir.glob("*.txt")):
        gold_path = gold_dir / f"{doc_path.stem}.xml"
        if not gold_path.is_file():
            raise MissingGoldError(doc_path.stem, str(gold_dir))
        doc = load_document(doc_path)
        _, final = extract_document(
            doc,
            lexicon=lexicon,
            rule_config=rule_config,
            ontology=ontology,
            mode=args.mode,
        )
        key = from_xml(gold_path.read_text(encoding="utf-8"))
        report = compare(final, key, strict_labels=args.strict_labels)
        reports.append(report)
        print(f"# {doc.id}")
        print(format_table(report), end="")
    combined = aggregate(reports)
    print("# aggregate")
    print(format_table(combined), end="")
    if args.report:
        _atomic_write(Path(args.report), machine_lines(combined))
    return 0


def cmd_tag(args) -> int:
    lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
    doc = load_document(args.file)
    first = True
    for sentence in split_sentences(doc):
        if not first:
            print()
        first = False
        for tok in tag(tokenize(sentence), lexicon):
            print(f"{tok.surface}\t{tok.lemma}\t{tok.tag}")
    return 0


def cmd_chunk(args) -> int:
    lexicon = load_lexicon(args.lexicon) if args.lexicon else default_lexicon()
    doc = load_document(args.file)
    first = True
    for analysis in analyze_document(doc, lexicon):
        if not first:
            print()
        first = False
        for phrase in analysis.phrases:
            print(f"{phrase.kind}\t{phrase.text()}\thead={phrase.head.surface}")
        for clause in analysis.clauses:
            print(_clause_line(clause))
    return 0


def _clause_line(clause) -> str:
    subject = clause.subject.text() if clause.subject else "-"
    verb = clause.verb.text() if clause.verb else "-"
    objects = "|".join(o.text() for o in clause.objects) or "-"
    pps = "|".join(f"{prep} {np.text()}" for prep, np in clause.pp_complements) or "-"
    return f"CLAUSE\tsubject={subject}\tverb={verb}\tobjects={objects}\tpps={pps}"


if __name__ == "__main__":
    sys.exit(main())
