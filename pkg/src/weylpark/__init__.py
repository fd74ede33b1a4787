"""Exact computations with Weyl modules over gl_r (x) C<X, Y> and their semi-infinite limits."""

__version__ = "0.1.0"
