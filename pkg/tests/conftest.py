import functools

import pytest

from qfk.datum import preset, with_field
from qfk.dualdouble import build_double
from qfk.hopf import build_H
from qfk.repn import all_simples, ambient

PRESETS = ("min-z4", "frobenius-sl2-l3", "prenichols-char3")


@functools.lru_cache(maxsize=None)
def hopf(name, p=None):
    d = preset(name)
    if p:
        d = with_field(d, {"backend": "prime", "p": p})
    return build_H(d)


@functools.lru_cache(maxsize=None)
def double(name, p=None):
    return build_double(hopf(name, p))


@functools.lru_cache(maxsize=None)
def amb(name, target, p=None):
    return ambient(hopf(name, p) if target == "H" else double(name, p))


@functools.lru_cache(maxsize=None)
def simples(name, target, p=None):
    return all_simples(amb(name, target, p))


@pytest.fixture(params=PRESETS)
def preset_name(request):
    return request.param
