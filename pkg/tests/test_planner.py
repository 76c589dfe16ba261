import json
from collections import Counter

import pytest

from tccert.planner import (
    CellComplexDescription,
    DescriptionError,
    projective_sum_preset,
    synthesize,
    tc_bracket,
)


def covers_each_index_pair_once(table, n):
    seen = Counter(table.index_pairs())
    return set(seen) == {(k, l) for k in range(n + 1) for l in range(n + 1)} and all(
        c == 1 for c in seen.values()
    )


@pytest.mark.parametrize("n, g", [(2, 2), (3, 2), (4, 5), (6, 3)])
def test_preset_partition(n, g):
    table = synthesize(projective_sum_preset(n, g))
    assert table.size == 2 * n + 1
    assert covers_each_index_pair_once(table, n)
    for d in table.domains:
        assert all(b.k + b.l == d.index for b in d.blocks)


def test_blocks_in_one_domain_are_separated():
    # distinct blocks of F_i differ in both indices, so neither closure meets the other
    table = synthesize(projective_sum_preset(4, 2))
    for d in table.domains:
        ks = [b.k for b in d.blocks]
        assert len(ks) == len(set(ks))


def test_rules():
    table = synthesize(projective_sum_preset(3, 2))
    block = table.domains[4].blocks[0]
    assert block.rule.segments == ("contract:v1", "path:gamma_1_3", "expand:v3")


def test_preset_cells():
    assert projective_sum_preset(3, 4).cells == (1, 4, 4, 1)
    with pytest.raises(DescriptionError):
        projective_sum_preset(0, 2)


def test_description_validation():
    with pytest.raises(DescriptionError):
        CellComplexDescription(2, (1, 1))
    with pytest.raises(DescriptionError):
        CellComplexDescription(2, (1, 0, 1))
    with pytest.raises(DescriptionError):
        CellComplexDescription(1, (1, 1), points=("p",))
    with pytest.raises(DescriptionError):
        CellComplexDescription(1, (1, 1), paths={(2, 0): "bad"})


def test_load(tmp_path):
    path = tmp_path / "circle.json"
    path.write_text(json.dumps({"name": "S1", "cells": [1, 1], "points": ["p", "q"], "paths": {"0,1": "arc"}}))
    cx = CellComplexDescription.load(path)
    table = synthesize(cx)
    assert table.size == 3
    assert table.domains[1].blocks[0].rule.path == "arc"
    assert "F_2" in table.to_text()
    assert table.to_dict()["complex"] == "S1"


@pytest.mark.parametrize(
    "payload", ['{"cells": "x"}', "[1, 2]", "{", '{"cells": [1, 1], "paths": {"01": "p"}}']
)
def test_load_rejects(tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    with pytest.raises(DescriptionError):
        CellComplexDescription.load(path)


def test_bracket_with_stub_lower_bound():
    b = tc_bracket(3, 2, lambda n, g: True)
    assert (b.lower, b.upper, b.optimal) == (6, 6, True)
    b = tc_bracket(3, 2, lambda n, g: False)
    assert b.lower is None and not b.optimal


@pytest.mark.parametrize("n, g", [(2, 2), (3, 1)])
def test_bracket_unsupported(n, g):
    b = tc_bracket(n, g, lambda n, g: True)
    assert not b.supported and not b.optimal
    assert b.to_dict()["optimal"] is False
