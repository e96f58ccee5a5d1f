"""Encrypted edit-distance services."""
