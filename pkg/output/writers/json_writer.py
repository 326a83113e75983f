"""
JSON writer for reports (spectra, maxima, orderings, scan summaries).
"""

import json
from typing import Any, TextIO

import numpy as np

from .base_writer import BaseWriter


class JsonWriter(BaseWriter):
    """
    Writes dictionaries, lists, or objects exposing to_dict().
    """

    CONFIG_FILE = "json.json"
    DEFAULT_CONFIG = {"indent": 2, "sort_keys": False}

    @staticmethod
    def _plain(data: Any) -> Any:
        if hasattr(data, 'to_dict'):
            return data.to_dict()
        if isinstance(data, (list, tuple)):
            return [JsonWriter._plain(item) for item in data]
        return data

    @staticmethod
    def _numpy_default(value: Any) -> Any:
        if isinstance(value, np.generic):
            return value.item()
        if isinstance(value, np.ndarray):
            return value.tolist()
        raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")

    def _write(self, data: Any, stream: TextIO) -> int:
        payload = self._plain(data)
        json.dump(
            payload,
            stream,
            indent=self.config['indent'],
            sort_keys=self.config['sort_keys'],
            default=self._numpy_default,
        )
        stream.write('\n')
        return len(payload) if isinstance(payload, list) else 1
