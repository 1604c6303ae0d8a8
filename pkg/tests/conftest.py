import pytest

from orthopart.engine import partition
from orthopart.polygen import suite

SUITE_SIZE = 1000


@pytest.fixture(scope="session")
def default_suite():
    return suite(SUITE_SIZE)


class _Results:
    """Partitions of the default suite, computed once and shared."""

    def __init__(self, polys):
        self.polys = polys
        self._results = None
        self.labels = None

    def results(self):
        if self._results is None:
            self.fill([partition(P) for P in self.polys])
        return self._results

    def fill(self, results):
        self._results = results
        self.labels = [[ac.label for ac in r.cuts_applied] for r in results]


@pytest.fixture(scope="session")
def suite_results(default_suite):
    return _Results(default_suite)
