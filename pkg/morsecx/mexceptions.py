class MorseBaseException(Exception):
    """Base exception class for morsecx"""
    def __init__(self, value):
        super(MorseBaseException, self).__init__(value)
        self.value = value

    def __str__(self):
        return repr(self.value)


class ComplexError(MorseBaseException):
    """
    The input does not describe a valid simplicial complex, or the complex
    does not satisfy the hypotheses of the requested operation.
    """
    pass


class FacetParseError(ComplexError):
    """
    A line of a facet or field file could not be parsed.  The line number is
    stored in the lineno attribute, 1-based.
    """
    def __init__(self, value, lineno=None):
        super(FacetParseError, self).__init__(value)
        self.lineno = lineno

    def __reduce__(self):
        return (self.__class__, (self.value, self.lineno))


class MatchingError(MorseBaseException):
    """
    A set of primitive vectors is not a matching: some simplex is in more
    than one pair.  The label of that simplex is in the simplex attribute.
    """
    def __init__(self, value, simplex=None):
        super(MatchingError, self).__init__(value)
        self.simplex = simplex

    def __reduce__(self):
        return (self.__class__, (self.value, self.simplex))


class NonUniformLayerError(MorseBaseException):
    """
    Nodes in a layer of the Hasse diagram do not all have the same degree.
    """
    pass


class BudgetExceeded(MorseBaseException):
    """
    An enumeration or search produced more objects than allowed.  The number
    reached before stopping is in the count attribute.
    """
    def __init__(self, value, count=None, budget=None):
        super(BudgetExceeded, self).__init__(value)
        self.count = count
        self.budget = budget

    def __reduce__(self):
        return (self.__class__, (self.value, self.count, self.budget))


class NotAutomorphismError(MorseBaseException):
    """
    A map is not an automorphism of the structure it was applied to.
    """
    pass


class MapNotTotalError(MorseBaseException):
    """
    A map between groups is not defined on every element of its domain.
    """
    pass


class MorseFatalError(MorseBaseException):
    """
    An explicit construction violated a property that must always hold.
    """
    pass
