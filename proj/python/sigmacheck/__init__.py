"""Python access to the sigma-subnormality checker."""

import json

from ._sigmacheck import (
    Group,
    SigmaError,
    catalog_names,
    prime_partitions,
)
from ._sigmacheck import verify as _verify


def analyze(group, partition="minimal"):
    """Report for one group (a Group or a catalog name) as a dict."""
    if not isinstance(group, Group):
        group = Group(group)
    return json.loads(group.analyze(partition))


def verify(scope="all", max_order=100, partitions="all", jobs=1, catalog=None):
    """Run a sweep; returns (records, summary)."""
    lines = _verify(scope, max_order, partitions, jobs, catalog)
    records = [json.loads(line) for line in lines]
    return records[:-1], records[-1]


__all__ = [
    "Group",
    "SigmaError",
    "analyze",
    "catalog_names",
    "prime_partitions",
    "verify",
]
