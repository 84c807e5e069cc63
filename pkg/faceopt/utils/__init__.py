"""Utils package exports"""
from faceopt.utils.logging_utils import (
    setup_logging,
    get_instance_id,
    get_command,
    instance_id_var,
    command_var
)

__all__ = [
    'setup_logging',
    'get_instance_id',
    'get_command',
    'instance_id_var',
    'command_var'
]
