import pytest

from gerty.core.exceptions import ImproperlyConfigured
from gerty.core.klass import get_class_from_module_string, lookup_registered
from gerty.grades.semirings import NATURALS, SECURITY


def test_get_class_from_module_string():
    assert get_class_from_module_string("gerty.grades.semirings.NATURALS") is NATURALS


@pytest.mark.parametrize(
    "module_string", ["NATURALS", "gerty.grades.no_such_module.NATURALS", "gerty.grades.semirings.REALS"]
)
def test_get_class_from_module_string_raises_exception_for_unresolvable_paths(module_string):
    with pytest.raises(ImproperlyConfigured):
        get_class_from_module_string(module_string)


def test_lookup_registered():
    registry = {"security": "gerty.grades.semirings.SECURITY"}

    assert lookup_registered(registry, "security", "semiring") is SECURITY


def test_lookup_registered_lists_the_known_names():
    registry = {"nat": "gerty.grades.semirings.NATURALS", "security": "gerty.grades.semirings.SECURITY"}

    with pytest.raises(ImproperlyConfigured) as e:
        lookup_registered(registry, "reals", "semiring")

    assert str(e.value) == "Unknown semiring 'reals'. Choose one of: nat, security."
