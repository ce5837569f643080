# quasihom/singularities/management/commands/table2.py

"""
`manage.py table2 --workers 8`

Reproduces the 10 weight systems with n = 5 and d <= 200 where psi_w(d_w) = 0,
i.e. the counter-examples to the strong Saito conjecture, and checks them against
`data/table2.csv`. The text format names each row's Thom-Sebastiani summands.
"""

# Local application imports
from ...catalog import SAITO_DECOMPOSITIONS, saito_counterexamples
from ...enumeration import TABLE2_COLUMNS, table2
from ..base import TableCommand


class Command(TableCommand):
    help = "Reproduce the strong Saito counter-examples for n = 5, d <= 200."

    columns = TABLE2_COLUMNS

    def compute(self, **engine):
        return table2(**engine)

    def annotations(self, rows):
        sums = {ws: " + ".join(names) for ws, names in zip(saito_counterexamples(), SAITO_DECOMPOSITIONS)}
        return [sums.get(row.system, "") for row in rows]
