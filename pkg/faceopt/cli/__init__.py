"""CLI package exports"""
from faceopt.cli.registry import Command, CommandRegistry, get_command_registry

# Get global registry instance
cli = get_command_registry()

__all__ = ['cli', 'Command', 'CommandRegistry', 'get_command_registry', 'load_commands']


def load_commands():
    """Import command modules so their decorators register them"""
    from faceopt.cli import commands  # noqa: F401
