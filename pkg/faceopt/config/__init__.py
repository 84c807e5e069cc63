"""Config package exports"""
from faceopt.config.faceopt_config import FaceoptConfig, faceopt_config

__all__ = ['FaceoptConfig', 'faceopt_config']
