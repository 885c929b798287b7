"""Run the command line interface with ``python -m aiii_steinberg``."""

from .cli import main

if __name__ == "__main__":
    main()
