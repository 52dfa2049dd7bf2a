"""Dense exact diagonalization of small Hubbard rings (test oracle).

Occupation bitmasks per spin species (site 0 is the least significant bit),
up states ordered before down states so cross-species hop signs cancel.
Kept deliberately independent of the root solver: it validates the solver's
conventions rather than sharing code with it.
"""
import itertools
import math

import numpy as np

from .errors import ConfigurationError

__all__ = ["exact_ground_energy_small", "sector_hamiltonian"]

DIMENSION_CAP = 4900  # choose(8, 4)**2


def _basis_states(L: int, n: int) -> list[int]:
    return [sum(1 << i for i in c) for c in itertools.combinations(range(L), n)]


def _hop_sign(state: int, i: int, j: int) -> int:
    """Fermionic sign for moving an electron between sites i and j of a bitmask."""
    if i == j:
        return 1
    lo, hi = (i, j) if i < j else (j, i)
    mask = ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)
    return -1 if bin(state & mask).count("1") % 2 else 1


def _check_sector(L: int, N: int, M: int) -> tuple[int, int]:
    if L < 3:
        raise ConfigurationError("oracle needs L >= 3 (a 2-site periodic ring double-counts its bond)")
    if L > 8:
        raise ConfigurationError("oracle is capped at L = 8")
    n_up, n_dn = N - M, M
    if not (0 <= n_dn <= n_up <= L):
        raise ConfigurationError(f"invalid sector: N={N}, M={M} on L={L}")
    dim = math.comb(L, n_up) * math.comb(L, n_dn)
    if dim > DIMENSION_CAP:
        raise ConfigurationError(f"sector dimension {dim} exceeds the cap {DIMENSION_CAP}")
    return n_up, n_dn


def sector_hamiltonian(L: int, N: int, M: int, U: float) -> np.ndarray:
    """Dense Hamiltonian of the (N - M up, M down) sector on a periodic ring."""
    n_up, n_dn = _check_sector(L, N, M)
    ups = _basis_states(L, n_up)
    dns = _basis_states(L, n_dn)
    up_index = {s: i for i, s in enumerate(ups)}
    dn_index = {s: i for i, s in enumerate(dns)}
    nu, nd = len(ups), len(dns)
    H = np.zeros((nu * nd, nu * nd))
    bonds = [(j, (j + 1) % L) for j in range(L)]
    for a, su in enumerate(ups):
        for b, sd in enumerate(dns):
            H[a * nd + b, a * nd + b] = U * bin(su & sd).count("1")

    def hops(states, index):
        out = []
        for a, s in enumerate(states):
            for (i, j) in bonds:
                for (src, dst) in ((i, j), (j, i)):
                    if (s >> src) & 1 and not (s >> dst) & 1:
                        t = s ^ (1 << src) ^ (1 << dst)
                        out.append((a, index[t], -_hop_sign(s, dst, src)))
        return out

    for a, b, amp in hops(ups, up_index):
        for c in range(nd):
            H[a * nd + c, b * nd + c] += amp
    for a, b, amp in hops(dns, dn_index):
        for c in range(nu):
            H[c * nd + a, c * nd + b] += amp
    return H


def exact_ground_energy_small(L: int, N: int, M: int, U: float) -> float:
    """Lowest eigenvalue of the dense sector Hamiltonian (L <= 8)."""
    return float(np.linalg.eigvalsh(sector_hamiltonian(L, N, M, U))[0])
