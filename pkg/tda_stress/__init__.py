"""TDA Stress - Topological features of physiological signals for stress detection."""

__version__ = "0.1.0"
