"""Persistence for preprocessed equality tables."""
from .table_storage import FORMAT_VERSION, load_eq_table, save_eq_table

__all__ = ["FORMAT_VERSION", "load_eq_table", "save_eq_table"]
