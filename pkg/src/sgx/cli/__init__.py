"""Command-line front end and text formats."""

from sgx.cli.app import build_parser, dumps, main, run
from sgx.cli.parser import ParseError, parse, parse_ast, parse_sigma_poly

__all__ = ["run", "main", "build_parser", "dumps", "parse", "parse_ast", "parse_sigma_poly", "ParseError"]
