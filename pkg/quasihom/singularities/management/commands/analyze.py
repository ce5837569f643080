# quasihom/singularities/management/commands/analyze.py

"""
`manage.py analyze 27,16,10,1 --degree 81`

Prints the full report of one weight system: reduced form, (C2-bar)/(C2), d_w,
Milnor number, psi_w, exponents, standard covering with the condition (I)
verdict per block, the weight orders and their compatibility, Saito flags.
"""

# Local application imports
from ...reports import analyze, format_text
from ..base import QuasihomCommand


class Command(QuasihomCommand):
    help = "Analyze a single weight system."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_weight_arguments(parser)

    def run(self, **options):
        ws = self.weight_system(options)
        self.emit(analyze(ws), options, format_text)
