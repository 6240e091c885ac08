"""matroidlab: exact and randomized testing of matroid-freeness
properties of Boolean functions over GF(2)."""

__version__ = "0.1.0"
