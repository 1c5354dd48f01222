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
import logging
import os
from collections.abc import Mapping

from gerty.conf import global_settings
from gerty.core.exceptions import ImproperlyConfigured

from dotenv import load_dotenv

from pathlib import Path

env_path = Path(".") / ".env"
load_dotenv(dotenv_path=env_path)


ENVIRONMENT_VARIABLE = "GERTY_SETTINGS_MODULE"


class Settings:
    """
    Settings and configuration for gerty.

    Read values from the module specified by the GERTY_SETTINGS_MODULE environment variable. The
    global defaults are used as-is when the variable is not set.
    """

    def __init__(self, settings_module=None):

        self._logger = None
        if settings_module is None:
            settings_module = os.environ.get(ENVIRONMENT_VARIABLE)

        # update this dict from global settings (but only for ALL_CAPS settings)
        for setting in dir(global_settings):
            if setting.isupper():
                setattr(self, setting, getattr(global_settings, setting))

        # store the settings module in case someone later cares
        self.GERTY_SETTINGS_MODULE = settings_module

        self._explicit_settings = set()
        if not settings_module:
            return

        try:
            mod = importlib.import_module(self.GERTY_SETTINGS_MODULE)
        except ImportError as e:
            raise ImproperlyConfigured(
                f"Could not import settings '{settings_module}': {e}."
            ) from e

        for setting in dir(mod):
            if setting.isupper():
                setting_value = getattr(mod, setting)

                # Check settings that should consist of collections of key / value pairs
                if setting in ("SEMIRINGS", "EQUALITY_BACKENDS") and not isinstance(
                    setting_value, Mapping
                ):
                    raise ImproperlyConfigured(
                        f"The {setting} setting must be a mapping of names to dotted paths."
                    )
                setattr(self, setting, setting_value)
                self._explicit_settings.add(setting)

    def is_overridden(self, setting):
        return setting in self._explicit_settings

    @property
    def logger(self):
        if self._logger is None:
            self._logger = logging.getLogger(self.LOGGER)
            self._logger.setLevel(self.LOGGING_LEVEL)

        return self._logger

    @logger.setter
    def logger(self, value):
        self._logger = value

    def __repr__(self):
        return '<{cls} "{settings_module}">'.format(
            cls=self.__class__.__name__,
            settings_module=self.GERTY_SETTINGS_MODULE,
        )


settings = Settings()
