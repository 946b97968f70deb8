"""Arithmetic in the prime field F_p for an odd prime p.

Scalars are plain ints in [0, p).  The class exists to carry the modulus
around and to centralize the validity checks; bulk arithmetic lives in the
numpy/Cython kernels, not here.
"""

from .errors import DivisionByZero, NotPrime, UnsupportedCharacteristic

# Largest modulus the exact int64 matmul kernels accept: n*(p-1)^2 must stay
# below 2^62 for any dimension n we allow, so cap p itself well under 2^31.
MAX_MODULUS = 2**31 - 1


def is_prime(n):
    """Deterministic primality check by trial division (moduli are small)."""
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


def check_modulus(p):
    """Validate p as a supported field characteristic.

    Raises NotPrime for composites and UnsupportedCharacteristic for p = 2
    (idempotent splitting needs 2 invertible) or oversized p.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrime(f"modulus must be an int, got {type(p).__name__}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise UnsupportedCharacteristic("characteristic 2 is not supported")
    if p > MAX_MODULUS:
        raise UnsupportedCharacteristic(
            f"modulus {p} exceeds the exact-arithmetic limit {MAX_MODULUS}"
        )
    return p


class PrimeField:
    """The field F_p with scalar operations on canonical representatives."""

    def __init__(self, p):
        self.p = check_modulus(p)

    def normalize(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        # p is prime, so Fermat gives a^(p-2) = a^(-1); pow is fast enough.
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"
