#!/usr/bin/env python3
"""
Steiner Chains Main Entry Point - console script target
"""

from .cli.main import main

if __name__ == "__main__":
    main()
