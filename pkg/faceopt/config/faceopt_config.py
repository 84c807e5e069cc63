"""
Faceopt Configuration Module
"""
import os
from dotenv import load_dotenv

load_dotenv()


class FaceoptConfig:
    """Library defaults and diagnostics settings"""

    def __init__(self):
        self.enum_limit: int = int(os.getenv('FACEOPT_ENUM_LIMIT', '1000000'))
        self.log_level: str = os.getenv('FACEOPT_LOG_LEVEL', 'WARNING').upper()
        self.seed: int = int(os.getenv('FACEOPT_SEED', '0'))
        self.sat_max_vars: int = int(os.getenv('FACEOPT_SAT_MAX_VARS', '20'))
        self.layout_limit: int = int(os.getenv('FACEOPT_LAYOUT_LIMIT', '20000'))

    def resolve_limit(self, limit=None) -> int:
        """Explicit limit if given, else the configured enumeration limit"""
        return self.enum_limit if limit is None else limit

    def to_dict(self) -> dict:
        """Convert config to dictionary"""
        return {
            'enum_limit': self.enum_limit,
            'log_level': self.log_level,
            'seed': self.seed,
            'sat_max_vars': self.sat_max_vars,
            'layout_limit': self.layout_limit,
        }


# Global config instance
faceopt_config = FaceoptConfig()
