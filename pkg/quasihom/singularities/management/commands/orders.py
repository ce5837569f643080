# quasihom/singularities/management/commands/orders.py

"""
`manage.py orders --order 2=7:6,4,1 --order 3=1:1 --set 1,3,6`

Prints the chains, quadrant and center of a tuple of excellent orders. Each
--order reads "p=s:S" with S listed in any order. With --set, the fiber, graph
and center criteria of compatibility are evaluated side by side; with --tensor,
the tensor product with a second tuple is added. --weights/--degree takes the
tuple of weight orders of a (C2) system instead.
"""

# Local application imports
from ...exceptions import InvalidInputError
from ...orders import weight_orders
from ...reports import check_limits, format_orders_text, orders_report
from ...utils import parse_int_list
from ...weights import WeightSystem
from ..base import QuasihomCommand, parse_order_tuple


class Command(QuasihomCommand):
    help = "Inspect a tuple of excellent orders and its compatible sets."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--order", action="append", help='An excellent order "p=s:k1,k2,...".')
        parser.add_argument("--tensor", action="append", help="An order of the second tuple.")
        parser.add_argument("--set", dest="m", help='A set M to test, e.g. "1,3,6".')
        parser.add_argument("--weights", help="Use the weight orders of this (C2) system.")
        parser.add_argument("--degree", type=int)

    def run(self, **options):
        if options["weights"]:
            if options["order"]:
                raise InvalidInputError("--order cannot be combined with --weights")
            if options["degree"] is None:
                raise InvalidInputError("--degree is required with --weights")
            ws = WeightSystem.parse(options["weights"], options["degree"])
            check_limits(ws)
            t = weight_orders(ws)
        else:
            t = parse_order_tuple(options["order"])
        M = parse_int_list(options["m"], "set M") if options["m"] else None
        other = parse_order_tuple(options["tensor"]) if options["tensor"] else None
        self.emit(orders_report(t, M, other), options, format_orders_text)
