# quasihom/singularities/management/commands/blocks.py

"""
`manage.py blocks 1,2,4` or `manage.py blocks --weights 27,16,10,1 --degree 81`

Checks the graph (M, E(M)) of a set M: components, p-planes, (S_p), (T_p) and
conditions (I)/(II), together with the rank and polynomial of its Orlik block.
With a weight system, every member of the standard covering of psi_w is checked.
"""

# Local application imports
from ...exceptions import InvalidInputError
from ...orders import standard_covering
from ...reports import blocks_report, check_limits, format_blocks_text
from ...utils import parse_int_list
from ...weights import WeightSystem, psi_w
from ..base import QuasihomCommand


class Command(QuasihomCommand):
    help = "Check conditions (I) and (II) for a set M or a standard covering."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("m", nargs="?", help='The set M, e.g. "1,2,4".')
        parser.add_argument("--weights", help="Check the standard covering of this weight system instead.")
        parser.add_argument("--degree", type=int)

    def run(self, **options):
        if options["weights"]:
            if options["degree"] is None:
                raise InvalidInputError("--degree is required with --weights")
            ws = WeightSystem.parse(options["weights"], options["degree"])
            check_limits(ws)
            members = standard_covering(psi_w(ws)).members
            payload = [blocks_report(M) for M in members]
            self.emit(payload, options, lambda reports: "\n\n".join(map(format_blocks_text, reports)))
            return
        if not options["m"]:
            raise InvalidInputError("Give a set M or --weights with --degree")
        self.emit(blocks_report(parse_int_list(options["m"], "set M")), options, format_blocks_text)
