"""
Base writer class for output formats.
All output writers should inherit from this class.
"""

import io
import json
import os
import sys
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, TextIO


class BaseWriter(ABC):
    """
    Abstract base class for output writers.
    """

    CONFIG_FILE = ""
    DEFAULT_CONFIG: Dict[str, Any] = {}

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the writer.

        Args:
            config: Configuration dictionary. If None, loads from the writer's config file
        """
        if config is None:
            config = self._load_config_file()
        self.config = {**self.DEFAULT_CONFIG, **config}
        self.error_message: Optional[str] = None
        self.last_path: Optional[str] = None
        self.records_written = 0

    @classmethod
    def _load_config_file(cls) -> Dict[str, Any]:
        """Load writer configuration from JSON; defaults if the file is missing."""
        writer_dir = os.path.dirname(os.path.abspath(__file__))
        config_path = os.path.join(os.path.dirname(writer_dir), 'configs', cls.CONFIG_FILE)

        if not cls.CONFIG_FILE or not os.path.exists(config_path):
            return dict(cls.DEFAULT_CONFIG)

        with open(config_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def write(self, data: Any, path: Optional[str] = None) -> bool:
        """
        Write a complete result to a file, or to stdout when path is None.

        Args:
            data: Result object understood by the writer
            path: Output file path

        Returns:
            True if written successfully, False otherwise (see error_message)
        """
        # Serialize fully before touching the target so failures leave no partial output
        buffer = io.StringIO(newline='')
        try:
            records = self._write(data, buffer)
            if path is None:
                sys.stdout.write(buffer.getvalue())
                sys.stdout.flush()
            else:
                directory = os.path.dirname(os.path.abspath(path))
                os.makedirs(directory, exist_ok=True)
                with open(path, 'w', encoding='utf-8', newline='') as f:
                    f.write(buffer.getvalue())
            self.records_written = records
            self.last_path = path
            self.error_message = None
            return True

        except (OSError, TypeError, ValueError) as e:
            self.error_message = f"{path or '<stdout>'}: {e}"
            return False

    @abstractmethod
    def _write(self, data: Any, stream: TextIO) -> int:
        """
        Serialize data to an open stream.

        Returns:
            Number of records written
        """
        pass

    def get_status(self) -> Dict[str, Any]:
        return {
            'type': self.format_name(),
            'path': self.last_path,
            'records_written': self.records_written,
            'error': self.error_message,
        }

    @classmethod
    def format_name(cls) -> str:
        return cls.CONFIG_FILE.rsplit('.', 1)[0]
