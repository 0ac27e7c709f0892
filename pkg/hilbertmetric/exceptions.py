# -*- coding: utf-8 -*-

"""
Exceptions
==========

Error classes used by this library.
"""


class HilbertMetricError(Exception):
    """
    Base class for python-hilbertmetric errors. All other errors are subclassed
    from this. Raising any other exception class is a bug and should be
    reported
    """
    def __init__(self, *args, operation=None, value=None, **kwargs):
        Exception.__init__(self, *args, **kwargs)

        self.operation = operation
        """Name of the operation that rejected its input"""

        self.value = value
        """Offending input, if there is a single one"""

    def __str__(self):
        message = Exception.__str__(self)
        if self.operation:
            return '{0}: {1}'.format(self.operation, message)
        return message


class DegenerateInput(HilbertMetricError):
    """Raised when points that must be distinct coincide within tolerance"""
    pass


class ParallelLines(DegenerateInput):
    """Raised when two lines that should intersect are parallel"""
    pass


class CollinearPoints(DegenerateInput):
    """Raised when a circle is requested through three collinear points"""
    pass


class DomainError(HilbertMetricError):
    pass


class OutOfDomain(DomainError):
    """
    Raised when an argument lies outside the set where an operation is
    defined, for example a point outside the unit ball or a non-positive
    argument of :py:func:`~hilbertmetric.special_functions.agm`
    """
    pass


class OutsideDomain(OutOfDomain):
    """Raised when a point is not strictly inside a convex domain"""
    pass


class NearBoundary(OutOfDomain):
    """
    Raised when a point is inside the domain but closer to the boundary than
    :py:attr:`~hilbertmetric.flags.NumericFlags.eps_bnd`
    """
    pass


class NotOnCircle(DomainError):
    """Raised when a point expected on the unit circle is not on it"""
    pass


class DomainNotNormalized(DomainError):
    """Raised when a domain is required to lie in the closed unit disk"""
    pass


class InvalidPolygon(DomainError):
    """
    Raised when polygon vertices do not describe a strictly convex polygon.
    ``line`` is the 1-based source line of the offending vertex when the
    polygon was read from text
    """
    def __init__(self, *args, line=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.line = line


class ConvergenceFailure(HilbertMetricError):
    """Raised when an iterative solver does not reach its tolerance"""
    pass


class PolygonFormatError(HilbertMetricError):
    """Raised when a polygon file line cannot be parsed"""
    def __init__(self, *args, line=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.line = line


class UsageError(HilbertMetricError):
    """Raised for command line values argparse cannot validate on its own"""
    pass
