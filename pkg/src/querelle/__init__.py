"""
Querelle - exact tangent directions and subtangents of plane algebraic curves.

Three independent procedures are implemented and cross-checked at any rational
point, including multiple points where the slope quotient is 0/0: repeated
differentiation of the implicit slope, slicing the shifted curve by the
tangent line, and the tangent cone.
"""

__version__ = "0.1.0"
