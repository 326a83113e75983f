"""
Output manager for writing results to files.
Manages the different output writers (CSV, JSON).
"""

from typing import Any, Dict, Optional

from .writers import BaseWriter, CsvWriter, JsonWriter


class OutputManager:
    """
    Manager for output writers.
    Handles choosing the output format and writing results.
    """

    AVAILABLE_WRITERS = {
        'csv': CsvWriter,
        'json': JsonWriter,
    }

    def __init__(self, output_format: str = 'csv', custom_config: Optional[Dict[str, Any]] = None):
        """
        Initialize output manager with a specific writer.

        Args:
            output_format: 'csv' or 'json'. Defaults to 'csv'
            custom_config: Custom configuration dictionary. If None, loads from the writer's config file

        Raises:
            ValueError: If the format is not recognized
        """
        if output_format not in self.AVAILABLE_WRITERS:
            raise ValueError(
                f"Unknown output format: {output_format}. "
                f"Available: {list(self.AVAILABLE_WRITERS.keys())}"
            )

        self.output_format = output_format
        self.writer: BaseWriter = self.AVAILABLE_WRITERS[output_format](custom_config)

    def write(self, data: Any, path: Optional[str] = None) -> bool:
        """
        Write a result.

        Args:
            data: Sweep result (CSV) or report object / dictionary (JSON)
            path: Output file; stdout if None

        Returns:
            True if written successfully, False otherwise
        """
        return self.writer.write(data, path)

    def get_status(self) -> Dict[str, Any]:
        return self.writer.get_status()

    @property
    def error_message(self) -> Optional[str]:
        return self.writer.error_message

    @staticmethod
    def get_available_formats() -> list:
        return list(OutputManager.AVAILABLE_WRITERS.keys())
