import pytest

from eigenstrata.golden import GOLDEN_CASES, golden_case, load_golden
from eigenstrata.partitions import Partition
from eigenstrata.sampling import random_samples


def test_registry_metadata():
    assert [c.generator_count for c in GOLDEN_CASES] == [7, 10, 9]
    assert [c.expected_codim for c in GOLDEN_CASES] == [2, 5, 4]
    # recorded as metadata only, not certified here
    assert [c.variety_degree for c in GOLDEN_CASES] == [4, 8, 6]
    with pytest.raises(KeyError):
        golden_case(Partition([4, 2]))


@pytest.mark.parametrize("case", GOLDEN_CASES, ids=lambda c: str(c.partition))
def test_lists_parse_with_expected_shape(case):
    gens = load_golden(case)
    assert len(gens) == case.generator_count
    for g in gens:
        assert g.is_homogeneous()
        assert g.degree() == case.degree
        assert g.nvars == case.partition.n * (case.partition.n + 1) // 2


@pytest.mark.parametrize("case", GOLDEN_CASES, ids=lambda c: str(c.partition))
def test_generators_vanish_on_fresh_samples(case):
    gens = load_golden(case)
    for s in random_samples(case.partition, 10, seed=31337):
        for g in gens:
            assert g.evaluate(s.ambient) == 0


def test_malformed_file_reported_by_name(tmp_path):
    case = GOLDEN_CASES[0]
    bad = tmp_path / case.filename
    bad.write_text("x11*x22-oops\n")
    with pytest.raises(ValueError, match=case.filename):
        load_golden(case, tmp_path)
