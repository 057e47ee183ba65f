"""
Steiner Chains

Invariants, feasibility and extremal problems for poristic Steiner chains.
"""

__version__ = "0.1.0"
__author__ = "Steiner Chains Team"
