"""Command-line entry point for knotgroups."""
import sys

from knotgroups.app import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
