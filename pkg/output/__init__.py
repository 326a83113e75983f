"""
Output management package for writing sweep tables and reports.
Supports multiple formats (CSV, JSON).
"""

from .output_manager import OutputManager

__all__ = ['OutputManager']
