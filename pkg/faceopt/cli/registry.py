"""
Subcommand registry and decorator
"""
import argparse
import logging
from typing import Any, Callable, Dict, List, Optional

logger = logging.getLogger(__name__)

Configure = Callable[[argparse.ArgumentParser], None]


class Command:
    """One `faceopt` subcommand"""

    def __init__(
        self,
        name: str,
        handler: Callable,
        description: str,
        configure: Optional[Configure] = None,
        takes_input: bool = True,
        metadata: Optional[Dict[str, Any]] = None
    ):
        self.name = name
        self.handler = handler
        self.description = description
        self.configure = configure
        self.takes_input = takes_input
        self.metadata = metadata or {}

    def add_to(self, subparsers, parents: Optional[List[argparse.ArgumentParser]] = None) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(
            self.name, help=self.description, description=self.description, parents=parents or []
        )
        if self.configure is not None:
            self.configure(parser)
        if self.takes_input:
            parser.add_argument("input", help="Graph JSON file, or a directory of them for batch mode")
        return parser

    def execute(self, args: argparse.Namespace, path: Optional[str]):
        """Run the handler on one instance"""
        try:
            return self.handler(args, path)
        except Exception as e:
            logger.error(f"Error executing command {self.name}: {e}")
            raise

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "takes_input": self.takes_input,
            "metadata": self.metadata
        }


class CommandRegistry:
    """Registry for subcommands"""

    def __init__(self):
        self._commands: Dict[str, Command] = {}

    def register_command(
        self,
        name: str,
        handler: Callable,
        description: str,
        configure: Optional[Configure] = None,
        takes_input: bool = True,
        metadata: Optional[Dict[str, Any]] = None
    ):
        self._commands[name] = Command(name, handler, description, configure, takes_input, metadata)
        logger.debug(f"Registered command: {name}")

    def get_command(self, name: str) -> Optional[Command]:
        return self._commands.get(name)

    def list_commands(self) -> List[Command]:
        return [self._commands[name] for name in sorted(self._commands)]

    def command(
        self,
        name: Optional[str] = None,
        description: Optional[str] = None,
        configure: Optional[Configure] = None,
        takes_input: bool = True,
        metadata: Optional[Dict[str, Any]] = None
    ):
        """Decorator to register a handler `(args, path) -> CommandResult`"""
        def decorator(func: Callable) -> Callable:
            command_name = name or func.__name__
            command_description = description or (func.__doc__ or "").strip() or f"Command: {command_name}"
            self.register_command(command_name, func, command_description, configure, takes_input, metadata)
            return func

        return decorator


# Global command registry
_command_registry = CommandRegistry()


def get_command_registry() -> CommandRegistry:
    return _command_registry
