"""Perm Pattern base classes for specific commands.

Defines shared command features: logging, configuration, reading inputs
and deferred output writing.
"""
import abc
from collections import namedtuple
from typing import Optional, Sequence
from footil.log import get_verbose_logger
from footil.formatting import format_func_input
from footil.patterns import DequeInvoker, MethodCommand

from .perm_pattern_config import PermPatternConfig
from . import perm_pattern_io as pp_io

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3

# Exit code with lines to print on standard output.
CommandOutcome = namedtuple('CommandOutcome', 'exit_code lines')
CommandOutcome.__new__.__defaults__ = ((),)


class BasePermPattern(abc.ABC):
    """Base class for all perm-pattern classes."""

    section = None

    def __init__(
            self,
            config_path: Optional[str] = None,
            log_level: Optional[str] = None) -> None:
        """Initialize perm pattern class."""
        # calling to make sure MRO is handled correctly with multiple
        # inheritance.
        super().__init__()
        self._config = PermPatternConfig(config_path, section=self.section)
        # Reads config file, so bad file is reported even with log_level.
        base_cfg = self._config.base
        log_level = log_level or base_cfg['log_level']
        self.logger = get_verbose_logger(__name__, log_level=log_level, fmt='')

    @property
    def config(self) -> PermPatternConfig:
        """Return PermPatternConfig instance."""
        return self._config


class PermPatternCommand(BasePermPattern):
    """Command class for perm-pattern toolkit.

    Must be inherited by all command classes.
    """

    name = None

    def __init__(self, *args, **kwargs):
        """Initialize command attributes."""
        super().__init__(*args, **kwargs)
        self._commands_invoker = DequeInvoker()

    @property
    def commands_invoker(self):
        """Return DequeInvoker object."""
        return self._commands_invoker

    def log_call(self, *args, **kwargs) -> None:
        """Log command invocation as it would be typed."""
        pattern, pattern_args = format_func_input(
            self.name,
            command=True,
            prefix='perm-pattern ',
            args=args,
            kwargs=kwargs)
        self.logger.notice(pattern, *pattern_args)

    def read_permutation(self, path: str):
        """Read permutation file."""
        pi = pp_io.read_permutation(pp_io.read_file(path))
        self.logger.info("Read permutation of length %s from %s", len(pi), path)
        return pi

    def read_graph(self, path: str):
        """Read graph file."""
        g = pp_io.read_graph(pp_io.read_file(path))
        self.logger.info(
            "Read graph with %s vertices and %s edges from %s",
            g.n, len(g.edges), path)
        return g

    def add_write(self, path: str, content: str) -> None:
        """Queue file write to run once command checks passed."""
        self.commands_invoker.add_command(
            MethodCommand(self._write, args=(path, content)))

    def add_instance_writes(self, inst, directory: str) -> None:
        """Queue writes of instance directory files."""
        self.commands_invoker.add_command(
            MethodCommand(self._write_instance, args=(inst, directory)))

    def _write(self, path: str, content: str) -> None:
        pp_io.write_file(path, content)
        self.logger.notice("Wrote %s", path)

    def _write_instance(self, inst, directory: str) -> None:
        pp_io.write_instance(inst, directory)
        self.logger.notice("Wrote instance to %s", directory)

    def check_run(self, **kwargs) -> bool:
        """Check if run method can be called.

        Override to implement specific checks.
        """
        return True

    @abc.abstractmethod
    def run(self, **kwargs) -> CommandOutcome:
        """Run action. Must be implemented."""
        self.check_run(**kwargs)


def format_lengths(inst) -> Sequence[str]:
    """Return instance summary line: z, pattern and text length."""
    return ['z=%s |sigma|=%s |pi|=%s' % (inst.z, len(inst.sigma), len(inst.pi))]
