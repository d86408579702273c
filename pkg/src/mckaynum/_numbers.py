"""Small integer number theory used throughout: factorization, totient, primes.

Everything here is exact and deterministic; trial division is plenty at the
scales the engine handles (group orders and conductors below 10^5 or so).
"""

from functools import lru_cache


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(n):
    """Return the prime factorization of n >= 1 as a tuple of (p, e) pairs."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n):
    """All positive divisors of n, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def euler_phi(n):
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def p_part(n, p):
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def pprime_part(n, p):
    return n // p_part(n, p)


def multiplicative_order(a, m):
    """Order of a modulo m; a must be coprime to m."""
    a %= m
    if a == 0 and m == 1:
        return 1
    x, k = a, 1
    while x != 1:
        x = x * a % m
        k += 1
        if k > m:
            raise ValueError(f"{a} is not invertible mod {m}")
    return k
