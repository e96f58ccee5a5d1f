"""Core configuration, settings and errors."""
from .config import settings, Settings, get_settings

__all__ = ["settings", "Settings", "get_settings"]
