#!/usr/bin/env python3
"""
Package entry point for running: python -m steiner_chains
"""

from .main import main

if __name__ == "__main__":
    main()
