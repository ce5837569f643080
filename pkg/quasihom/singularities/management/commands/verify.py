# quasihom/singularities/management/commands/verify.py

"""
`manage.py verify --suite orders --seed 7`

Runs the randomized and exhaustive property suites (cyclo, weights, orders,
blocks) and the census sweeps, and exits with code 1 if any property has a
counter-example. --audit additionally re-checks a random sample of the unpruned
census universe against the pruned candidate generator.
"""

# Standard library imports
import logging

# Local application imports
from ...enumeration import SearchSpec, audit_pruning
from ...suites import SUITES, run_suite
from ..base import QuasihomCommand

LOGGER = logging.getLogger(__name__)


def format_reports(payload: dict) -> str:
    lines = []
    for suite in payload["suites"]:
        lines.append(f"[{suite['suite']}] {'pass' if suite['ok'] else 'FAIL'}")
        for prop in suite["properties"]:
            lines.append(f"  {'ok  ' if prop['ok'] else 'FAIL'} {prop['name']}: {prop['cases']} cases")
            for case in prop["counterexamples"]:
                lines.append(f"         counterexample {case}")
    if "audit" in payload:
        audit = payload["audit"]
        lines.append(f"[pruning audit] {audit['sampled']} sampled, {len(audit['misses'])} misses")
        lines.extend(f"  miss {ws}" for ws in audit["misses"])
    return "\n".join(lines)


class Command(QuasihomCommand):
    help = "Run the verification suites; exit code 1 on any violation."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--suite", choices=SUITES + ("all",), default="all")
        parser.add_argument("--seed", type=int, help="Seed of the randomized suites.")
        parser.add_argument("--cases", type=int, help="Random cases per property.")
        parser.add_argument("--max-d", type=int, help="Largest degree of the sweeps (default 100).")
        parser.add_argument("--max-vertices", type=int,
                            help="Largest quadrant of the exhaustive compatibility check (default 12).")
        parser.add_argument("--workers", type=int, help="Worker processes for the sweeps.")
        parser.add_argument("--audit", action="store_true", help="Also audit the pruned generator.")
        parser.add_argument("--n", type=int, default=4, help="Number of variables of the audit.")
        parser.add_argument("--audit-rate", type=float, default=1e-4)

    def run(self, **options):
        reports = run_suite(
            options["suite"], options["seed"],
            cases=options["cases"], d_max=options["max_d"], workers=options["workers"],
            max_vertices=options["max_vertices"],
        )
        payload = {"suites": [report.to_json() for report in reports]}
        ok = all(report.ok for report in reports)
        if options["audit"]:
            spec = SearchSpec(options["n"], options["max_d"] or 100, prune=False)
            payload["audit"] = audit_pruning(spec, options["audit_rate"], options["seed"])
            ok = ok and not payload["audit"]["misses"]
        payload["ok"] = ok
        self.emit(payload, options, format_reports)
        if not ok:
            failed = [p.name for report in reports for p in report.properties if not p.ok]
            LOGGER.error(f"Verification failed: {failed}")
            self.fail_verification(f"Verification failed for {', '.join(failed) or 'the pruning audit'}")
