import itertools

import pytest

from ribboncat.catalog import CATALOG_NAMES, deligne_product, load_named
from ribboncat.ribbon import centre, degenerate_by_s_matrix


def specs():
    for n in CATALOG_NAMES:
        yield n, load_named(n)
    for a, b in itertools.combinations(CATALOG_NAMES, 2):
        yield f"{a}*{b}", deligne_product(load_named(a), load_named(b))


@pytest.mark.parametrize("name,spec", list(specs()), ids=lambda x: x if isinstance(x, str) else "")
def test_phase_and_s_row_degeneracy_agree(name, spec):
    assert centre(spec) == degenerate_by_s_matrix(spec)
