"""
Bose-Hubbard graph entanglement
Main entry point for the command-line tool.
"""

from cli import main


if __name__ == "__main__":
    main()
