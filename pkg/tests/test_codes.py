import warnings

import numpy as np
import pytest

from tracecodes.codes import (
    CodeError,
    build_family_code,
    code_from_defining_set,
    defining_set_d1,
    encode,
    orbit_representatives,
)
from tracecodes.field import make_field
from tracecodes.weights import weight_distribution


@pytest.mark.parametrize(
    "p,m,e,size",
    [(3, 2, 1, 20), (5, 2, 1, 104), (2, 3, 1, 27), (3, 3, 1, 224)],
)
def test_trace_kernel_set_sizes(p, m, e, size):
    field = make_field(p, 2 * m)
    dset = defining_set_d1(field, e)
    assert len(dset) == size
    # formula check is independent of construction order
    assert len(dset) == p ** (2 * m - e) + p ** (m - e) - p**m - 1


def test_set_elements_sorted_and_distinct():
    field = make_field(3, 4)
    logs = defining_set_d1(field, 1).logs()
    assert logs == sorted(set(logs))


@pytest.mark.parametrize(
    "p,m,e,full,reduced",
    [(3, 3, 1, 224, 112), (5, 2, 1, 104, 26)],
)
def test_orbit_representatives_size(p, m, e, full, reduced):
    field = make_field(p, 2 * m)
    dset = defining_set_d1(field, e)
    assert len(dset) == full
    assert len(orbit_representatives(dset)) == reduced


def test_orbit_choice_gives_equivalent_code():
    field = make_field(3, 4)
    dset = defining_set_d1(field, 1)
    lo = code_from_defining_set(orbit_representatives(dset, "min"))
    hi = code_from_defining_set(orbit_representatives(dset, "max"))
    assert (lo.n, lo.k) == (hi.n, hi.k)
    assert weight_distribution(lo).counts == weight_distribution(hi).counts


def test_orbit_representatives_requires_base_family():
    field = make_field(3, 4)
    dset = orbit_representatives(defining_set_d1(field, 1))
    with pytest.raises(CodeError):
        orbit_representatives(dset)


@pytest.mark.parametrize(
    "family,p,m,e,n,k",
    [
        ("D1", 3, 2, 1, 20, 4),
        ("D1", 3, 3, 1, 224, 6),
        ("D1BAR", 3, 3, 1, 112, 6),
        ("D1BAR", 5, 2, 1, 26, 4),
        ("D2", 5, 1, None, 24, 3),
        ("D2", 3, 2, None, 80, 6),
    ],
)
def test_code_parameters(codes, family, p, m, e, n, k):
    code = codes(family, p, m, e)
    assert (code.n, code.k) == (n, k)
    assert code.gen.shape == (k, n)
    assert code.gen.min() >= 0 and code.gen.max() < p
    assert code.provenance["family"] == family


def test_every_nonzero_message_hits_the_two_weights(codes):
    code = codes("D1", 3, 2, 1)
    for idx in range(1, 3**4):
        msg = [(idx // 3**i) % 3 for i in range(4)]
        w = int(np.count_nonzero(encode(code, msg)))
        assert w in (12, 18)


def test_encode_rejects_wrong_length(codes):
    code = codes("D1", 3, 2, 1)
    with pytest.raises(CodeError):
        encode(code, [0, 1, 2])


def test_e_must_divide_m():
    field = make_field(3, 4)
    with pytest.raises(CodeError):
        defining_set_d1(field, 4)


def test_e_equal_m_warns_and_yields_empty_set():
    field = make_field(3, 4)
    with pytest.warns(UserWarning):
        dset = defining_set_d1(field, 2)
    assert len(dset) == 0
    with pytest.raises(CodeError):
        code_from_defining_set(dset)


def test_odd_degree_field_rejected():
    field = make_field(3, 3)
    with pytest.raises(CodeError):
        defining_set_d1(field, 1)


def test_unknown_family_rejected():
    with pytest.raises(CodeError):
        build_family_code("D9", 3, 2, 1)
    with pytest.raises(CodeError):
        build_family_code("D1", 3, 2)  # missing e


def test_scaling_closure_of_trace_kernel_set():
    field = make_field(3, 4)
    dset = defining_set_d1(field, 1)
    logs = set(dset.logs())
    minus = field.from_prime(-1)
    for x in dset.elements:
        assert (minus * x).dlog() in logs


def test_provenance_roundtrips_to_json(codes):
    import json

    code = codes("D2", 5, 1)
    blob = json.dumps(code.to_json_dict())
    data = json.loads(blob)
    assert data["n"] == 24 and data["k"] == 3
    assert np.array_equal(np.array(data["gen"]), code.gen)
