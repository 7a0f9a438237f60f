"""Exact-arithmetic toolkit for cyclic sieving on words, with statistics,
closed-form generating functions, insertion-tree bijections, and
subset/multisubset refinements, all backed by brute-force oracles."""

__version__ = "0.1.0"
