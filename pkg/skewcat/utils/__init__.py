"""Shared utilities: errors, logging, configuration and docstring parsing."""
