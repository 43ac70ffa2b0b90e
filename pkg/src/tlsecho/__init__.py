"""Spectral-diffusion analysis of two-level-system echo decays."""
__version__ = "1.0.0"
