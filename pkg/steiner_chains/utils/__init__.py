"""
Utils module

Provides logging, configuration, and the error hierarchy with input guards.
"""

from .logger import setup_logging, get_logger
from .validators import (
    SteinerError,
    ValidationError,
    InputError,
    DomainError,
    RangeError,
    NumericError,
    PoleError,
    NoSocle,
    SingularSystem,
    Infeasible,
    InfeasibleReason,
    ensure_non_empty_sequence,
    ensure_positive,
    ensure_chain_length,
    ensure_quadruple,
)
from .config import ConfigManager, SteinerConfig, get_merged_config
