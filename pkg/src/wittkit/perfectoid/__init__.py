from .suites import divisibility_suite, elements_suite, ghost_theta_checks, theta_suite
from .symbolic import SymbolicRing
from .theta import CyclotomicTarget, theta, theta_r, theta_tilde_r
from .tilt import AinfElement, PerfectoidElements, TiltModel, make_elements

__all__ = [
    "TiltModel",
    "AinfElement",
    "PerfectoidElements",
    "make_elements",
    "SymbolicRing",
    "CyclotomicTarget",
    "theta",
    "theta_r",
    "theta_tilde_r",
    "elements_suite",
    "theta_suite",
    "ghost_theta_checks",
    "divisibility_suite",
]
