"""Small exact number-theory helpers: primality, factorization.

is_prime is a deterministic Miller-Rabin test. Witness set: the first 13
primes, which decide primality correctly for every m below 3.3e24 (known
verification bound for that base set). Inputs past the bound raise instead
of silently degrading to a probabilistic answer.

factorize is trial division with a hard budget plus a certified prime
cofactor; it either returns a complete factorization or raises.
"""

from __future__ import annotations

from .errors import FactorizationBudgetError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_LIMIT = 1_000_000


def is_prime(m: int) -> bool:
    """Deterministic primality test for 0 <= m < 3.3e24."""
    if m < 0:
        raise ValueError(f"is_prime expects a nonnegative integer, got {m}")
    if m >= _MR_LIMIT:
        raise ValueError(f"is_prime witness set is only deterministic below {_MR_LIMIT}")
    if m < 2:
        return False
    for b in _MR_BASES:
        if m == b:
            return True
        if m % b == 0:
            return False
    # m odd, m > 41: strong probable prime test to each base
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> dict[int, int]:
    """Factor m >= 1 into {prime: exponent}.

    Trial division up to 10^6, then the remaining cofactor must itself be
    prime (certified by is_prime), otherwise FactorizationBudgetError.
    """
    if m < 1:
        raise ValueError(f"factorize expects m >= 1, got {m}")
    factors: dict[int, int] = {}
    for q in (2, 3):
        while m % q == 0:
            factors[q] = factors.get(q, 0) + 1
            m //= q
    # wheel over 6k +- 1
    q = 5
    while q <= _TRIAL_LIMIT and q * q <= m:
        for cand in (q, q + 2):
            while m % cand == 0:
                factors[cand] = factors.get(cand, 0) + 1
                m //= cand
        q += 6
    if m > 1:
        # below the squared trial limit any survivor is prime
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT or (m < _MR_LIMIT and is_prime(m)):
            factors[m] = factors.get(m, 0) + 1
        else:
            raise FactorizationBudgetError(f"cofactor {m} exceeds the factorization budget")
    return factors
