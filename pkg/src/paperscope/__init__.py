"""paperscope: self-contained scholarly-corpus exploration engine."""

__version__ = "0.1.0"
