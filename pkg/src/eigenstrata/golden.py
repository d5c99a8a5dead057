"""Shipped generator lists for the three small strata, plus their metadata.

The text files carry the known ideal generators verbatim (whitespace
normalized, one polynomial per line, '#' comments).  They are regression
anchors: interpolation must reproduce their span, every generator must
vanish exactly on fresh samples, and the Jacobian at smooth points must show
the expected codimension.  If a listed polynomial ever fails exact
verification, the failure is reported with the polynomial and the witness
sample — the shipped data is never patched silently.

The `variety_degree` fields are metadata only: certifying them needs
machinery (Groebner bases / homotopy continuation) that is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .partitions import Partition
from .polynomials import Polynomial, VariableIndexing


@dataclass(frozen=True)
class GoldenCase:
    partition: Partition
    degree: int
    generator_count: int
    expected_codim: int
    variety_degree: int     # recorded, not certified here
    filename: str


GOLDEN_CASES: tuple[GoldenCase, ...] = (
    GoldenCase(Partition([2, 1]), degree=3, generator_count=7,
               expected_codim=2, variety_degree=4, filename="generators_2_1.txt"),
    GoldenCase(Partition([3, 1]), degree=2, generator_count=10,
               expected_codim=5, variety_degree=8, filename="generators_3_1.txt"),
    GoldenCase(Partition([2, 2]), degree=2, generator_count=9,
               expected_codim=4, variety_degree=6, filename="generators_2_2.txt"),
)


def golden_case(lam: Partition) -> GoldenCase:
    for case in GOLDEN_CASES:
        if case.partition == lam:
            return case
    raise KeyError(f"no shipped generator list for partition {lam}")


def golden_text(case: GoldenCase, golden_dir: str | Path | None = None) -> str:
    if golden_dir is not None:
        return (Path(golden_dir) / case.filename).read_text()
    return resources.files("eigenstrata").joinpath("data").joinpath(case.filename).read_text()


def load_golden(case: GoldenCase, golden_dir: str | Path | None = None) -> list[Polynomial]:
    """Parse a shipped generator list; raises ValueError naming the file on
    any malformed line."""
    indexing = VariableIndexing(case.partition.n)
    polys = []
    for lineno, line in enumerate(golden_text(case, golden_dir).splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            polys.append(Polynomial.from_text(line, indexing))
        except Exception as exc:
            raise ValueError(f"{case.filename}:{lineno}: cannot parse generator "
                             f"({exc})") from exc
    return polys
