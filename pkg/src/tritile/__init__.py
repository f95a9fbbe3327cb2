"""Exact tilings of polygons by congruent copies of a triangle with a 2pi/3 or pi/3 angle."""

__version__ = "0.1.0"
