"""Absorbing sets, trapping sets and Gallager-B failures on Tanner graphs."""

from __future__ import annotations

__version__ = "0.1.0"
