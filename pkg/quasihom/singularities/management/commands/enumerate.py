# quasihom/singularities/management/commands/enumerate.py

"""
`manage.py enumerate --n 4 --max-d 200 --format csv --out census.csv`

Runs the census of all (C2-bar) weight systems with n weights and degree up to
--max-d. CSV output streams the rows in census order; JSON output is the run
summary (counts, elapsed time, shards).
"""

# Standard library imports
import csv
import logging

# Local application imports
from ...enumeration import BACKENDS, SearchSpec, csv_columns, enumerate_weight_systems
from ..base import QuasihomCommand

LOGGER = logging.getLogger(__name__)


class Command(QuasihomCommand):
    help = "Enumerate all (C2-bar) weight systems of a census universe."

    formats = ("csv", "json")
    default_format = "csv"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True, help="Number of variables.")
        parser.add_argument("--max-d", type=int, required=True, help="Largest degree.")
        parser.add_argument("--workers", type=int, help="Worker processes (local backend).")
        parser.add_argument("--backend", choices=BACKENDS)
        parser.add_argument("--no-prune", action="store_true", help="Walk the unpruned universe (debug).")
        parser.add_argument("--resume", action="store_true", help="Reuse finished shards.")
        parser.add_argument("--checkpoint-dir", help="Directory for finished shards.")
        parser.add_argument("--time-limit", type=float, help="Stop after this many seconds.")

    def run(self, **options):
        spec = SearchSpec(options["n"], options["max_d"], prune=not options["no_prune"])
        engine = {
            "workers": options["workers"],
            "backend": options["backend"],
            "checkpoint_dir": options["checkpoint_dir"],
            "resume": options["resume"],
            "time_limit": options["time_limit"],
        }
        if options["format"] == "json":
            summary = enumerate_weight_systems(spec, **engine)
            self.emit(summary.to_json(), options)
            return

        columns = csv_columns(spec.n)
        if options["out"]:
            with open(options["out"], "w", encoding="utf-8", newline="") as stream:
                summary = self._stream_csv(spec, columns, stream, engine)
            LOGGER.info(f"Census written to {options['out']}")
        else:
            summary = self._stream_csv(spec, columns, self.stdout, engine)
        self.stderr.write(f"{summary.count_c2bar} (C2-bar) systems, {summary.count_c2bar_not_c2} without (C2)")

    def _stream_csv(self, spec, columns, stream, engine):
        writer = csv.DictWriter(stream, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        return enumerate_weight_systems(spec, sink=lambda row: writer.writerow(row.to_record()), **engine)
