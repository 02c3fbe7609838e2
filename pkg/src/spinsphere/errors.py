"""Exception classes shared across the package."""


class SpinsphereError(Exception):
    """Base class for all domain errors."""


class PoleAt(SpinsphereError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"evaluation at a pole: z = {point}")


class IdenticallyZero(SpinsphereError):
    pass


class NonPositiveMetric(SpinsphereError):
    def __init__(self, point, value=None):
        self.point = point
        self.value = value
        super().__init__(f"conformal factor not positive at z = {point} (value {value})")


class OriginHasNoImage(SpinsphereError):
    pass


class NonFiniteSample(SpinsphereError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"integrand not finite at node {node}")


class OutsideOverlap(SpinsphereError):
    pass


class TooCloseToZeroSet(SpinsphereError):
    pass


class UnboundedSpinor(SpinsphereError):
    pass


class ZeroOnContour(SpinsphereError):
    pass


class NonIntegralWinding(SpinsphereError):
    def __init__(self, raw):
        self.raw = raw
        super().__init__(f"argument increment {raw} is not close to an integer multiple of 2*pi")


class UnresolvedCluster(SpinsphereError):
    pass


class SingularBasis(SpinsphereError):
    pass


class NoSpectralGap(SpinsphereError):
    def __init__(self, singular_values):
        self.singular_values = singular_values
        super().__init__("no threshold splits the singular values with the required gap")


class DegenerateMap(SpinsphereError):
    pass


class InadmissiblePair(SpinsphereError):
    def __init__(self, report):
        self.report = report
        super().__init__("pole conditions rejected the requested pair")


class ConstantMapWithNonzeroSpinor(SpinsphereError):
    pass


class ConstantMap(SpinsphereError):
    pass


class TooManyExclusions(SpinsphereError):
    def __init__(self, excluded, total):
        self.excluded = excluded
        self.total = total
        super().__init__(f"{excluded} of {total} grid nodes excluded (budget is 1%)")
