#!/usr/bin/env python3
"""
Steiner Chains - poristic chain calculator
Program entry point
"""

from steiner_chains.main import main

if __name__ == "__main__":
    main()
