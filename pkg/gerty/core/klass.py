# This file is a part of Gerty.
#
# Copyright (C) 2021 The Gerty developers
#
# Gerty is free software; you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or (at
# your option) any later version.
#
# Gerty is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
# FITNESS FOR A PARTICULAR PURPOSE. See the GNU Lesser General Public
# License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import importlib

from gerty.core.exceptions import ImproperlyConfigured


# Keep these functions in their own file to prevent import loops with the various 'settings' files.
def get_class_from_module_string(module_string):
    """
    Resolve a dotted 'package.module.attribute' path.

    :param module_string: The dotted path of a class, function or module-level value.
    :return: The object the path refers to.
    :raises ImproperlyConfigured: if the module cannot be imported or does not define the attribute.
    """
    try:
        mod_name, attr_name = module_string.rsplit(".", 1)
        module = importlib.import_module(mod_name)
        return getattr(module, attr_name)
    except (ValueError, ImportError, AttributeError) as e:
        raise ImproperlyConfigured(f"Cannot resolve '{module_string}': {e}.") from e


def lookup_registered(registry, name, kind):
    """
    Resolve one entry of a name -> dotted path settings mapping (SEMIRINGS, EQUALITY_BACKENDS).

    :raises ImproperlyConfigured: for names that are not registered.
    """
    try:
        module_string = registry[name]
    except KeyError:
        raise ImproperlyConfigured(
            f"Unknown {kind} '{name}'. Choose one of: {', '.join(sorted(registry))}."
        )

    return get_class_from_module_string(module_string)
