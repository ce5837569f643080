# quasihom/singularities/management/commands/table1.py

"""
`manage.py table1 --workers 8`

Reproduces the 23 weight systems with n = 4 and d <= 200 that satisfy (C2-bar)
but not (C2), with their census index L and a-tuple, and checks them against
`data/table1.csv`. A mismatch exits with code 1.
"""

# Local application imports
from ...enumeration import TABLE1_COLUMNS, table1
from ..base import TableCommand


class Command(TableCommand):
    help = "Reproduce the (C2-bar) but not (C2) table for n = 4, d <= 200."

    columns = TABLE1_COLUMNS

    def compute(self, **engine):
        return table1(**engine)
