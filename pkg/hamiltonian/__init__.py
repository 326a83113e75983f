"""
Hamiltonian package.
Fixed-N sector matrix of the Bose-Hubbard Hamiltonian on a rooted graph.
"""

from .sector_hamiltonian import Couplings, SectorHamiltonian, build_hamiltonian, matvec

__all__ = ['Couplings', 'SectorHamiltonian', 'build_hamiltonian', 'matvec']
