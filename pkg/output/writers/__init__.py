"""
Output writer package.
Provides the file formats results can be written in.
"""

from .base_writer import BaseWriter
from .csv_writer import CsvWriter, sweep_frame, sweep_header
from .json_writer import JsonWriter

__all__ = ['BaseWriter', 'CsvWriter', 'JsonWriter', 'sweep_frame', 'sweep_header']
