"""Every JSON payload the CLI can emit validates against its shipped schema."""

import json
from importlib import resources

import numpy as np
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from eigenstrata import reports
from eigenstrata.distance import FloatSymmetric
from eigenstrata.partitions import Partition


def _schema_dir():
    return resources.files("eigenstrata").joinpath("schemas")


def _registry():
    entries = []
    for f in _schema_dir().iterdir():
        if f.name.endswith(".json"):
            doc = json.loads(f.read_text())
            entries.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(entries)


REGISTRY = _registry()


def check(name, payload):
    doc = json.loads(_schema_dir().joinpath(f"{name}.json").read_text())
    Draft202012Validator(doc, registry=REGISTRY).validate(payload)


def test_dimension_report():
    check("dimension_report", reports.dimension_payload(Partition([2, 1]), 0))


def test_samples_report():
    check("samples_report", reports.samples_payload(Partition([2, 1]), 2, 0, 10))


def test_interpolation_report():
    check("interpolation_report",
          reports.interpolation_payload(Partition([2, 1]), 3, 0, "exact", 10, 3))


def test_hilbert_report():
    check("hilbert_report", reports.hilbert_payload(Partition([2, 1]), range(3, 6), 0))


def test_degree_report():
    check("degree_report", reports.degree_payload(Partition([2, 2]), 0))


def test_edd_report():
    check("edd_report", reports.edd_payload(Partition([2, 2]), 0))


def test_nearest_report():
    u = FloatSymmetric.from_array(np.diag([0.0, 2.0, 10.0]))
    check("nearest_report", reports.nearest_payload(u, Partition([2, 1])))


def test_invariants_report():
    check("invariants_report", reports.invariants_payload(Partition([2, 1]), 4, 0))


def test_discriminant_report():
    check("discriminant_report", reports.discriminant_payload(2))
    check("discriminant_report", reports.discriminant_payload(3, sos_check=True))


def test_verify_report():
    check("verify_report", reports.verify_payload(0))


def test_suite_report_schema_on_light_run():
    from eigenstrata.suite import run_suite
    report = run_suite(5, only=[1, 12])
    check("suite_report", report.to_json())
