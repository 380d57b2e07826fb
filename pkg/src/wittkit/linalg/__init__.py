from . import euclidean, howell, integer_lattice, padic

__all__ = ["euclidean", "howell", "integer_lattice", "padic"]
