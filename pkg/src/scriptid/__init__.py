"""Script identification over ISO 15924 codes."""

__version__ = "0.1.0"
