# quasihom/singularities/management/commands/saito.py

"""
`manage.py saito 55,51,30,18,10 --degree 120`, `manage.py saito --sum D13,K1`
or `manage.py saito`

Evaluates the strong (psi_w(d_w) > 0) and weak (also psi_w(d_w/2) > 0) Saito
conditions of a weight system, of a Thom-Sebastiani sum of named systems, or of
every catalogued counter-example when no system is given. A system without
(C2) is not a singularity and exits with the usage code.
"""

# Local application imports
from ...catalog import SAITO_DECOMPOSITIONS, named, sorted_descending, thom_sebastiani
from ...reports import check_limits, exact_number
from ...weights import (WeightSystem, check_c2bar, milnor_number, saito_strong, saito_value,
                        saito_weak, st_pairs)
from ..base import QuasihomCommand


def saito_entry(ws: WeightSystem, names=None) -> dict:
    entry = {
        **ws.to_json(),
        "c2bar": check_c2bar(ws),
        "mu": exact_number(milnor_number(ws)),
        "d_w": st_pairs(ws).d_w,
        "psi_d_w": exact_number(saito_value(ws)),
        "saito_strong": saito_strong(ws),
        "saito_weak": saito_weak(ws),
    }
    if names:
        entry["summands"] = list(names)
    return entry


def format_entries(entries) -> str:
    lines = []
    for e in entries:
        ws = WeightSystem(tuple(e["weights"]), e["d"])
        summands = f"  = {' + '.join(e['summands'])}" if "summands" in e else ""
        lines.append(
            f"{ws}  mu={e['mu']}  d_w={e['d_w']}  psi(d_w)={e['psi_d_w']}  "
            f"strong={'yes' if e['saito_strong'] else 'no'}  weak={'yes' if e['saito_weak'] else 'no'}"
            f"{summands}"
        )
    return "\n".join(lines)


class Command(QuasihomCommand):
    help = "Evaluate the strong and weak Saito conditions."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_weight_arguments(parser, required=False)
        parser.add_argument("--sum", help='Thom-Sebastiani sum of named systems, e.g. "D13,K1".')

    def run(self, **options):
        if options["weights"]:
            ws = self.weight_system(options)
            check_limits(ws)
            entries = [saito_entry(ws)]
        elif options["sum"]:
            names = [name for name in options["sum"].replace(" ", "").split(",") if name]
            ws = sorted_descending(thom_sebastiani(*(named(name) for name in names)))
            entries = [saito_entry(ws, names)]
        else:
            entries = [
                saito_entry(sorted_descending(thom_sebastiani(*(named(name) for name in names))), names)
                for names in SAITO_DECOMPOSITIONS
            ]
        self.emit(entries, options, format_entries)
