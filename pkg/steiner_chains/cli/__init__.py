"""
CLI module

Provides the command-line entry point and command implementations.
"""

from .main import main, app

__all__ = ['main', 'app']
