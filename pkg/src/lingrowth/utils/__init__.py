"""Utility helpers shared by the command line."""

from .decorators import command_guard

__all__ = ["command_guard"]
