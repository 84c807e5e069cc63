"""Logging setup shared by the CLI and batch workers"""
import logging
import sys
from contextvars import ContextVar
from typing import Union

# Context variables filled in per processed instance
instance_id_var: ContextVar[str] = ContextVar('instance_id', default='-')
command_var: ContextVar[str] = ContextVar('command', default='none')


class ContextFilter(logging.Filter):
    def filter(self, record):
        record.instance_id = instance_id_var.get()
        record.command = command_var.get()
        return True


def setup_logging(level: Union[int, str] = logging.WARNING):
    """Configure logging on stderr; stdout carries JSON results only"""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - [%(command)s:%(instance_id)s] - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )

    for handler in logging.root.handlers:
        handler.addFilter(ContextFilter())


def get_instance_id() -> str:
    """Get current instance id"""
    return instance_id_var.get()


def get_command() -> str:
    """Get current command name"""
    return command_var.get()
