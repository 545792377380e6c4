"""wittlift: exact length-2 Witt-vector algebra, matrix groups over small
finite rings, and lifting-obstruction verification."""

__version__ = "0.1.0"
