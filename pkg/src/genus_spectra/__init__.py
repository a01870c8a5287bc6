"""Genus spectra of finite p-groups of maximal class."""

__version__ = "0.1.0"
