"""
Analysis package.
Tau sweeps, finite-difference derivatives, entanglement maxima, topology orderings,
the complete / pendant-complete family scans and the dimer self-check.
"""

from .sweep import TauGrid, SweepPoint, SweepResult, SweepError, solve_point, sweep
from .derivatives import DerivativePeak, NoInteriorPeakError, finite_difference, find_derivative_peak
from .maxima import EntanglementMax, golden_section_max, find_entanglement_max
from .ordering import GraphEntry, OrderingReport, concordance, ordering_report
from .scans import CompleteScanEntry, PendantScanEntry, complete_scan, pendant_scan
from .dimer_check import CheckResult, dimer_check, expected_variance_peak

__all__ = [
    'TauGrid',
    'SweepPoint',
    'SweepResult',
    'SweepError',
    'solve_point',
    'sweep',
    'DerivativePeak',
    'NoInteriorPeakError',
    'finite_difference',
    'find_derivative_peak',
    'EntanglementMax',
    'golden_section_max',
    'find_entanglement_max',
    'GraphEntry',
    'OrderingReport',
    'concordance',
    'ordering_report',
    'CompleteScanEntry',
    'PendantScanEntry',
    'complete_scan',
    'pendant_scan',
    'CheckResult',
    'dimer_check',
    'expected_variance_peak',
]
