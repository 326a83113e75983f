"""
CSV writer for sweep results.
One row per grid point, fixed column set per file.
"""

from typing import List, TextIO

import numpy as np
import pandas as pd

from analysis import SweepResult
from .base_writer import BaseWriter


def sweep_header(L: int, variance_vertex: int = 0) -> List[str]:
    """Column names of a sweep table over L vertices."""
    return (
        ['tau', 'energy', 'entanglement']
        + [f'mean_{i}' for i in range(L)]
        + [f'var_{i}' for i in range(L)]
        + ['dE_dtau', f'dvar{variance_vertex}_dtau', 'degenerate']
    )


def sweep_frame(data: SweepResult) -> pd.DataFrame:
    """Sweep result as a DataFrame with the sweep_header columns."""
    columns = {
        'tau': data.taus,
        'energy': data.energies,
        'entanglement': data.entanglements,
    }
    for i in range(data.L):
        columns[f'mean_{i}'] = data.means(i)
    for i in range(data.L):
        columns[f'var_{i}'] = data.variances(i)
    columns['dE_dtau'] = np.asarray(data.entanglement_derivative, dtype=float)
    columns[f'dvar{data.variance_vertex}_dtau'] = np.asarray(data.variance_derivative, dtype=float)
    columns['degenerate'] = np.array([int(point.degenerate) for point in data.points], dtype=int)

    return pd.DataFrame(columns, columns=sweep_header(data.L, data.variance_vertex))


class CsvWriter(BaseWriter):
    """
    Writes SweepResult tables with round-trip precision.
    """

    CONFIG_FILE = "csv.json"
    DEFAULT_CONFIG = {"delimiter": ",", "significant_digits": 17, "lineterminator": "\n"}

    def _write(self, data: SweepResult, stream: TextIO) -> int:
        if not isinstance(data, SweepResult):
            raise TypeError(f"CSV output needs a sweep result, got {type(data).__name__}")

        df = sweep_frame(data)
        df.to_csv(
            stream,
            index=False,
            sep=self.config['delimiter'],
            float_format=f"%.{int(self.config['significant_digits'])}g",
            lineterminator=self.config['lineterminator'],
        )
        return len(df)
