"""neronlab: local reduction data of elliptic curves over F_q(t)."""

__version__ = "0.1.0"
