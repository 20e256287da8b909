#!/usr/bin/env python
"""Command-line entry point for the endoring project: `manage.py endoring`, `manage.py test`."""
import sys

from endoring.__main__ import run

if __name__ == '__main__':
    run(sys.argv)
