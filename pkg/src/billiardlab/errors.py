"""Exception types shared across the package."""


class BilliardLabError(Exception):
    """Base class for all package errors."""


class ConvexityViolation(BilliardLabError):
    """Support function fails H + H'' > 0; carries the first failing angle."""

    def __init__(self, theta, value):
        self.theta = float(theta)
        self.value = float(value)
        super().__init__(f"H + H'' = {value:.6g} <= 0 at theta = {theta:.6g}")


class GlancingRay(BilliardLabError):
    """Ray meets the boundary below the tangency threshold."""

    def __init__(self, sin_alpha, index=None):
        self.sin_alpha = float(sin_alpha)
        self.index = index
        where = "" if index is None else f" at iterate {index}"
        super().__init__(f"glancing ray{where}: sin(alpha) = {sin_alpha:.3e}")


class CoincidentPoints(BilliardLabError):
    pass


class NoConvergence(BilliardLabError):
    def __init__(self, message, residual=None, history=None):
        self.residual = residual
        self.history = history or []
        super().__init__(message)


class DegenerateHessian(BilliardLabError):
    pass


class ResonantOrbit(BilliardLabError):
    def __init__(self, resonances):
        self.resonances = list(resonances)
        super().__init__(f"low-order resonances present: {self.resonances}")


class JetIllConditioned(BilliardLabError):
    pass


class SmallDivisorBlowup(BilliardLabError):
    def __init__(self, k, margin, required):
        self.k = k
        self.margin = margin
        self.required = required
        super().__init__(
            f"divisor margin {margin:.3e} under-runs {required:.3e} at k = {k}"
        )


class SpacingTooCoarse(BilliardLabError):
    pass


class LevelOutOfRange(BilliardLabError):
    pass


class TurningPointFailure(BilliardLabError):
    pass


class JetMissing(BilliardLabError):
    pass


class SymmetryViolation(BilliardLabError):
    pass


class InsufficientBoundaryApproach(BilliardLabError):
    pass


class SmallnessViolation(BilliardLabError):
    """One or more KAM-step smallness conditions failed."""

    def __init__(self, failures):
        self.failures = dict(failures)
        items = ", ".join(f"{k}: margin {v:.3e}" for k, v in self.failures.items())
        super().__init__(f"smallness conditions failed ({items})")


class FlowStepFailure(BilliardLabError):
    pass


class ParameterOutOfRange(BilliardLabError):
    def __init__(self, inequality, value=None):
        self.inequality = inequality
        self.value = value
        msg = inequality if value is None else f"{inequality} (got {value!r})"
        super().__init__(msg)


class PeriodicLine(BilliardLabError):
    pass


class DegenerateDeterminant(BilliardLabError):
    pass


class ConfigError(BilliardLabError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
