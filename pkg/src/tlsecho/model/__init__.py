"""
Domain layer: special functions, echo models, Monte Carlo oracles, trace processing,
fits, loss estimates, synthetic data and file formats.
"""
