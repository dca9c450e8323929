"""Packaged data files: constants snapshot and the synthetic fixture."""
