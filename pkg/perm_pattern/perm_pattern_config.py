"""Perm Pattern configuration module.

Allows to keep command defaults (search budgets, harness settings) in an
INI file instead of passing them on every call.
"""
from typing import Any, Optional
from configparser import ConfigParser, NoSectionError, NoOptionError

BASE_SECTION = 'pattern'
MATCH_SECTION = 'match'
VERIFY_SECTION = 'verify'

DEFAULT_LOG_LEVEL = 'NOTICE'
DEFAULT_MATCH_BUDGET = 10 ** 8


class PermPatternConfig:
    """Class to manage perm-pattern configuration."""

    @classmethod
    def get_option_vals(cls, name, default, forced_type=None) -> dict:
        """Get option values for config."""
        return {
            'name': name,
            'default': default,
            'forced_type': forced_type,
        }

    @classmethod
    def get_config_struct(cls) -> dict:
        """Get structure for reading config."""
        return {
            BASE_SECTION: {
                'loglevel': cls.get_option_vals(
                    'log_level', DEFAULT_LOG_LEVEL, forced_type=str),
            },
            MATCH_SECTION: {
                'budget': cls.get_option_vals(
                    'budget', DEFAULT_MATCH_BUDGET, forced_type=int),
            },
            VERIFY_SECTION: {
                'maxn': cls.get_option_vals('max_n', 5, forced_type=int),
                'l': cls.get_option_vals('l', 3, forced_type=int),
                'samples': cls.get_option_vals('samples', 50, forced_type=int),
                'seed': cls.get_option_vals('seed', 0, forced_type=int),
                'budget': cls.get_option_vals('budget', 10 ** 6, forced_type=int),
                'exhaustive': cls.get_option_vals(
                    'exhaustive', False, forced_type=bool),
            },
        }

    def get_value(
        self,
        parser: ConfigParser,
        section: str,
        option: str,
            vals: dict) -> Any:
        """Retrieve value from config file.

        Args:
            parser: parser with config file loaded.
            section: config section.
            option: config section option.
            vals: config structure to handle read options.
        """
        try:
            if vals.get('forced_type') is bool:
                return parser.getboolean(section, option)
            val = parser.get(section, option)
            if vals.get('forced_type'):
                val = vals['forced_type'](val)
            return val
        except (NoSectionError, NoOptionError):
            return None
        except ValueError:
            raise ValueError(
                "%s option in %s section has invalid value" % (
                    option, section))

    def _get_config_template(self) -> dict:
        return {
            section: {} for section in self.get_config_struct().keys()
        }

    def read(self) -> dict:
        """Return configuration, defaults filling missing options."""
        cfg = self._get_config_template()
        parser = ConfigParser()
        if self.path:
            if not parser.read(self.path):
                raise ValueError("Config file %s can't be read" % self.path)
        for section, section_struct in self.get_config_struct().items():
            for option, vals in section_struct.items():
                val = self.get_value(parser, section, option, vals)
                if val is None:
                    val = vals['default']
                cfg[section][vals['name']] = val
        return cfg

    def __init__(self, path: Optional[str] = None, section=None) -> None:
        """Initialize configuration for a command section."""
        super().__init__()
        self._path = path
        self._section = section
        self._config = None

    @property
    def path(self) -> Optional[str]:
        """Return config file path."""
        return self._path

    @property
    def sections(self) -> dict:
        """Return full config, reading it on first access."""
        if self._config is None:
            self._config = self.read()
        return self._config

    @property
    def base(self) -> dict:
        """Return base cfg part, not related with specific command."""
        return self.sections[BASE_SECTION]

    @property
    def section(self) -> dict:
        """Return rel section config to have shortcut most used cfg."""
        try:
            return self.sections[self._section]
        except KeyError:  # if command has no related section.
            raise Warning(
                "This configuration does not have main section specified")
