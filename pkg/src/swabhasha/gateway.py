"""CLI and HTTP suggestion service around the transliteration engine.

The CLI offers suggest / eval / serve / validate subcommands; the service
exposes GET /api/suggest and GET /api/health for the composer UI. All loaded
state (code table, lexicon, rules) is immutable, so concurrent requests need
no locking and no request can mutate engine state.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .coder import CodeTable, load_code_table
from .data import GOLD_FILE, LEXICON_FILE, RULES_FILE, bundled_path
from .errors import EmptyInputError, SwabhashaError
from .evaluator import evaluate, load_gold, report
from .expander import RuleSet, load_rules
from .lexicon import Lexicon, load_lexicon
from .matcher import DEFAULT_THRESHOLD, DEFAULT_TOP_K
from .pipeline import TransliterationResult, transliterate

ENV_LEXICON = "SWABHASHA_LEXICON"
ENV_RULES = "SWABHASHA_RULES"
ENV_PORT = "SWABHASHA_PORT"

DEFAULT_PORT = 8763

_TOKEN_RE = re.compile(r"[a-zA-Z]+")


@dataclass(frozen=True)
class ServiceConfig:
    lexicon_path: Path
    rules_path: Path
    code_table_path: Path | None = None
    host: str = "127.0.0.1"
    port: int = DEFAULT_PORT
    top_k_default: int = DEFAULT_TOP_K
    threshold_default: int = DEFAULT_THRESHOLD
    static_dir: Path | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be within 1..65535, got {self.port}")
        if self.top_k_default < 1:
            raise ValueError("top_k_default must be >= 1")
        if not 0 <= self.threshold_default <= 100:
            raise ValueError("threshold_default must be within 0..100")


@dataclass(frozen=True)
class Engine:
    """The loaded artifacts a gateway instance serves from."""

    table: CodeTable
    lexicon: Lexicon
    rules: RuleSet


def load_engine(
    lexicon_path: Path | str,
    rules_path: Path | str,
    code_table_path: Path | str | None = None,
) -> Engine:
    table = load_code_table(code_table_path) if code_table_path else CodeTable.default()
    lexicon = load_lexicon(lexicon_path, table)
    rules = load_rules(rules_path)
    return Engine(table=table, lexicon=lexicon, rules=rules)


def result_payload(result: TransliterationResult) -> dict:
    """Wire form of a transliteration result, shared by the CLI and the service."""
    return {
        "query": result.query,
        "scenario": result.scenario.value,
        "suggestions": [
            {
                "sinhala": s.sinhala,
                "romanization": s.romanization,
                "score": s.score,
                "source": s.source.value,
            }
            for s in result.suggestions
        ],
    }


def split_tokens(text: str) -> list[str]:
    """Split free text on non-letter characters into lowercase tokens."""
    return [t.lower() for t in _TOKEN_RE.findall(text)]


def create_app(
    engine: Engine,
    top_k_default: int = DEFAULT_TOP_K,
    threshold_default: int = DEFAULT_THRESHOLD,
    static_dir: Path | None = None,
) -> FastAPI:
    app = FastAPI(openapi_url=None, docs_url=None, redoc_url=None)
    # Development companion service: the composer UI may be served from
    # another localhost port, so allow cross-origin reads.
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["GET"], allow_headers=["*"]
    )

    @app.get("/api/suggest")
    def suggest(q: str = "", top: int | None = None, threshold: int | None = None):
        # IME behavior: suggestions are for the token being typed, i.e. the
        # last letter run of the query string.
        tokens = split_tokens(q)
        if not tokens:
            return JSONResponse({"error": "query has no letters"}, status_code=400)
        top_k = top_k_default if top is None else top
        thresh = threshold_default if threshold is None else threshold
        if top_k < 1:
            return JSONResponse({"error": "top must be >= 1"}, status_code=400)
        if not 0 <= thresh <= 100:
            return JSONResponse({"error": "threshold must be within 0..100"}, status_code=400)
        try:
            result = transliterate(
                tokens[-1], engine.lexicon, engine.rules, engine.table,
                top_k=top_k, threshold=thresh,
            )
        except SwabhashaError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return result_payload(result)

    @app.get("/api/health")
    def health():
        return {"status": "ok", "lexicon_entries": len(engine.lexicon)}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(config: ServiceConfig) -> int:
    """Load the engine and serve until interrupted. Returns a process exit code."""
    import uvicorn

    try:
        engine = load_engine(config.lexicon_path, config.rules_path, config.code_table_path)
    except (SwabhashaError, OSError, ValueError) as exc:
        print(f"error: cannot start service: {exc}", file=sys.stderr)
        return 1
    app = create_app(
        engine,
        top_k_default=config.top_k_default,
        threshold_default=config.threshold_default,
        static_dir=config.static_dir,
    )
    print(
        f"serving {len(engine.lexicon)} lexicon entries on "
        f"http://{config.host}:{config.port}",
        file=sys.stderr,
    )
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    except (OSError, SystemExit) as exc:
        print(f"error: service stopped: {exc}", file=sys.stderr)
        return 1
    return 0


def _resolve(flag_value: str | None, env_name: str | None, bundled_name: str) -> Path:
    if flag_value:
        return Path(flag_value)
    if env_name:
        env_value = os.environ.get(env_name)
        if env_value:
            return Path(env_value)
    return bundled_path(bundled_name)


def _engine_from_args(args: argparse.Namespace) -> Engine:
    return load_engine(
        _resolve(args.lexicon, ENV_LEXICON, LEXICON_FILE),
        _resolve(args.rules, ENV_RULES, RULES_FILE),
        Path(args.code_table) if getattr(args, "code_table", None) else None,
    )


def _add_engine_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", metavar="PATH", help="lexicon file (default: bundled)")
    parser.add_argument("--rules", metavar="PATH", help="expansion rule file (default: bundled)")
    parser.add_argument("--code-table", metavar="PATH", help="code table override file")


def _cmd_suggest(args: argparse.Namespace) -> int:
    engine = _engine_from_args(args)
    tokens = split_tokens(args.word)
    if not tokens:
        raise EmptyInputError("input word is empty")
    results = [
        transliterate(
            token, engine.lexicon, engine.rules, engine.table,
            top_k=args.top, threshold=args.threshold,
        )
        for token in tokens
    ]
    if args.json:
        payload = result_payload(results[0]) if len(results) == 1 else [
            result_payload(r) for r in results
        ]
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for result in results:
            if len(results) > 1:
                print(f"# {result.query}")
            for s in result.suggestions:
                print(f"{s.sinhala}\t{s.score}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    engine = _engine_from_args(args)
    gold_path = Path(args.gold) if args.gold else bundled_path(GOLD_FILE)
    cases = load_gold(gold_path)
    metrics = evaluate(cases, engine.lexicon, engine.rules, engine.table, k=args.k)
    print(report(metrics), end="")
    ok = (
        metrics.word_level_acc >= args.min_word_acc
        and metrics.suggestion_level_acc >= args.min_suggestion_acc
    )
    return 0 if ok else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    port = args.port if args.port is not None else int(os.environ.get(ENV_PORT, DEFAULT_PORT))
    try:
        config = ServiceConfig(
            lexicon_path=_resolve(args.lexicon, ENV_LEXICON, LEXICON_FILE),
            rules_path=_resolve(args.rules, ENV_RULES, RULES_FILE),
            code_table_path=Path(args.code_table) if args.code_table else None,
            host=args.host,
            port=port,
            top_k_default=args.top,
            threshold_default=args.threshold,
            static_dir=Path(args.static) if args.static else None,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return serve(config)


def _cmd_validate(args: argparse.Namespace) -> int:
    # The code table is checked first so the lexicon validates against the
    # override rather than the default assignment.
    checks: list[tuple[str, Path]] = []
    if args.code_table:
        checks.append(("code table", Path(args.code_table)))
    checks.append(("lexicon", _resolve(args.lexicon, ENV_LEXICON, LEXICON_FILE)))
    checks.append(("rules", _resolve(args.rules, ENV_RULES, RULES_FILE)))
    if args.gold:
        checks.append(("gold", Path(args.gold)))
    failed = False
    table = CodeTable.default()
    for kind, path in checks:
        try:
            if kind == "code table":
                table = load_code_table(path)
                detail = "26 letters"
            elif kind == "lexicon":
                loaded = load_lexicon(path, table)
                detail = f"{len(loaded)} entries"
            elif kind == "rules":
                ruleset = load_rules(path)
                detail = f"{len(ruleset.rules)} rules"
            else:
                detail = f"{len(load_gold(path))} cases"
        except (SwabhashaError, ValueError, OSError) as exc:
            print(f"FAIL {kind} {path}: {exc}")
            failed = True
            continue
        print(f"OK   {kind} {path}: {detail}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swabhasha",
        description="Singlish to Sinhala word transliteration: suggestions, evaluation, service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_suggest = sub.add_parser("suggest", help="print ranked Sinhala suggestions for a word")
    p_suggest.add_argument("word", help="Singlish word (multi-word input is split on non-letters)")
    p_suggest.add_argument("--top", type=int, default=DEFAULT_TOP_K, help="suggestions to return")
    p_suggest.add_argument(
        "--threshold", type=int, default=DEFAULT_THRESHOLD, help="minimum similarity score 0..100"
    )
    p_suggest.add_argument("--json", action="store_true", help="emit the wire-format JSON")
    _add_engine_flags(p_suggest)
    p_suggest.set_defaults(func=_cmd_suggest)

    p_eval = sub.add_parser("eval", help="score the engine against a gold case file")
    p_eval.add_argument("--gold", metavar="PATH", help="gold case file (default: bundled)")
    p_eval.add_argument("--k", type=int, default=5, help="suggestion list length")
    p_eval.add_argument(
        "--min-word-acc", type=float, default=0.84, help="word-level accuracy required for exit 0"
    )
    p_eval.add_argument(
        "--min-suggestion-acc",
        type=float,
        default=0.92,
        help="suggestion-level accuracy required for exit 0",
    )
    _add_engine_flags(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_serve = sub.add_parser("serve", help="run the HTTP suggestion service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=None, help=f"default {ENV_PORT} or {DEFAULT_PORT}")
    p_serve.add_argument("--top", type=int, default=DEFAULT_TOP_K, help="default suggestion count")
    p_serve.add_argument(
        "--threshold", type=int, default=DEFAULT_THRESHOLD, help="default similarity threshold"
    )
    p_serve.add_argument("--static", metavar="DIR", help="also serve this directory at /")
    _add_engine_flags(p_serve)
    p_serve.set_defaults(func=_cmd_serve)

    p_validate = sub.add_parser("validate", help="check lexicon, rule, table, and gold files")
    p_validate.add_argument("--gold", metavar="PATH", help="gold case file to check")
    _add_engine_flags(p_validate)
    p_validate.set_defaults(func=_cmd_validate)

    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Entry point. Exit codes: 0 success, 1 domain error, 2 usage error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SwabhashaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())
