# quasihom/singularities/management/base.py

"""
Shared plumbing for the singularities management commands.

Every command subclasses `QuasihomCommand` and implements `run()` instead of
`handle()`. The base class translates the library's exception family into
`CommandError`s with stable exit codes and writes the payload in the requested
format to stdout or to `--out`.

Exit codes:
    0  success
    1  verification failure (a suite, a sweep or a golden table did not hold)
    2  usage error (malformed input, unmet precondition)
    3  resource rejection (input too large, run aborted by a limit)
"""

# Standard library imports
import json
import logging
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple

# Django imports
from django.core.management.base import BaseCommand, CommandError

# Local application imports
from ..exceptions import (ContractViolation, EnumerationAborted, InvalidInputError,
                          QuasihomError, ResourceLimitError)
from ..orders import ExcellentOrder, OrderTuple
from ..utils import parse_int_list
from ..weights import WeightSystem

LOGGER = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def exit_code_for(error: QuasihomError) -> int:
    if isinstance(error, (ResourceLimitError, EnumerationAborted)):
        return EXIT_RESOURCE
    if isinstance(error, ContractViolation):
        return EXIT_VERIFICATION_FAILED
    return EXIT_USAGE


class QuasihomCommand(BaseCommand):
    """Base class: exception mapping, weight-system arguments and output."""

    formats = ("json", "text")
    default_format = "json"

    def add_arguments(self, parser):
        parser.add_argument("--format", choices=self.formats, default=self.default_format)
        parser.add_argument("--out", help="Write the output to this file instead of stdout.")

    def add_weight_arguments(self, parser, required: bool = True):
        parser.add_argument(
            "weights", nargs=None if required else "?",
            help='Comma-separated weights, e.g. "27,16,10,1", or fractions with --normalized.',
        )
        parser.add_argument("--degree", type=int, help="The degree d of the weight system.")
        parser.add_argument(
            "--normalized", action="store_true",
            help='Read the weights as normalized fractions, e.g. "1/3,1/4".',
        )

    def weight_system(self, options) -> WeightSystem:
        text = options["weights"]
        if options["normalized"]:
            if options["degree"] is not None:
                raise InvalidInputError("--degree cannot be combined with --normalized")
            return WeightSystem.from_normalized(part for part in text.replace(" ", "").split(",") if part)
        if options["degree"] is None:
            raise InvalidInputError("--degree is required unless --normalized is given")
        return WeightSystem.parse(text, options["degree"])

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except QuasihomError as e:
            code = exit_code_for(e)
            LOGGER.error(f"{self.__module__.rsplit('.', 1)[-1]} failed ({code}): {e}")
            raise CommandError(str(e), returncode=code) from e

    def run(self, **options):
        raise NotImplementedError("subclasses of QuasihomCommand must provide a run() method")

    # ==========================================================================
    # OUTPUT
    # ==========================================================================

    def emit(self, payload: Any, options, text: Optional[Callable[[Any], str]] = None) -> None:
        """Writes `payload` as JSON, or through `text` for --format text."""
        if options["format"] == "text" and text is not None:
            rendered = text(payload)
        else:
            rendered = json.dumps(payload, indent=2)
        self.write(rendered, options)

    def write(self, rendered: str, options) -> None:
        if not rendered.endswith("\n"):
            rendered += "\n"
        if options.get("out"):
            path = Path(options["out"])
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(rendered, encoding="utf-8")
            LOGGER.info(f"Output written to {path}")
        else:
            self.stdout.write(rendered, ending="")

    def fail_verification(self, message: str) -> None:
        raise CommandError(message, returncode=EXIT_VERIFICATION_FAILED)


class TableCommand(QuasihomCommand):
    """Reproduces a census table and checks it against its golden file."""

    formats = ("csv", "json", "text")
    default_format = "text"
    columns: List[str] = []

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--workers", type=int, help="Worker processes (local backend).")
        parser.add_argument("--resume", action="store_true", help="Reuse finished shards.")
        parser.add_argument("--checkpoint-dir", help="Directory for finished shards.")

    def compute(self, **engine) -> list:
        raise NotImplementedError("subclasses of TableCommand must provide a compute() method")

    def annotations(self, rows) -> Optional[List[str]]:
        """An extra text column, or None."""
        return None

    def run(self, **options):
        rows = self.compute(
            workers=options["workers"],
            checkpoint_dir=options["checkpoint_dir"],
            resume=options["resume"],
        )
        records = [{c: row.to_record()[c] for c in self.columns} for row in rows]
        if options["format"] == "json":
            self.emit([row.to_json() for row in rows], options)
        elif options["format"] == "csv":
            lines = [",".join(self.columns)] + [",".join(r[c] for c in self.columns) for r in records]
            self.write("\n".join(lines), options)
        else:
            self.write(self._text(records, self.annotations(rows)), options)

    def _text(self, records, extra: Optional[List[str]]) -> str:
        widths = {c: max([len(c)] + [len(r[c]) for r in records]) for c in self.columns}
        lines = ["  ".join(c.rjust(widths[c]) for c in self.columns)]
        for index, r in enumerate(records):
            line = "  ".join(r[c].rjust(widths[c]) for c in self.columns)
            lines.append(f"{line}  {extra[index]}" if extra else line)
        return "\n".join(lines)


def parse_order(text: str) -> Tuple[int, ExcellentOrder]:
    """Parses "p=s:S" such as "2=7:6,4,1" or "5=2:" (S empty)."""
    try:
        prime, rest = text.split("=", 1)
        s, _, S = rest.partition(":")
        return int(prime), ExcellentOrder(int(s), frozenset(parse_int_list(S, "order set")))
    except ValueError as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f'Cannot parse order {text!r}; expected "p=s:k1,k2,..."') from e


def parse_order_tuple(texts: Optional[List[str]]) -> OrderTuple:
    return OrderTuple(tuple(parse_order(text) for text in texts or ()))
