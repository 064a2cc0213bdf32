"""Character fields of the classical-group character series.

Every character in the series attached to a semisimple class has the same
field: the fixed field of the class stabiliser inside a cyclotomic field,
possibly extended by the Gauss-sum square root sqrt(omega*p).  The extension
happens exactly for symplectic groups with q a non-square and -1 an
eigenvalue of the class; orthogonal series never grow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import InputError
from .galois_arith import GaloisElement, gauss_sqrt_sign, is_square_in_fq, signed_prime
from .groups import Family, GroupSpec
from .semisimple import (
    CyclotomicSubfield,
    SemisimpleClass,
    enumerate_classes,
    galois_stabilizer,
    order_of,
    sigma_image,
)


@dataclass(frozen=True)
class CharacterField:
    """The field of a character series: a cyclotomic subfield plus an
    optional sqrt(omega*p) adjunction.

    The adjunction doubles the degree (the prime p never divides the
    cyclotomic conductor here, so the two parts are linearly disjoint), and
    ruins realness unless omega = +1.
    """

    base: CyclotomicSubfield
    adjoin_sqrt_omega_p: bool
    p: int

    @property
    def degree(self) -> int:
        return self.base.degree * (2 if self.adjoin_sqrt_omega_p else 1)

    @property
    def adjoined_radicand(self) -> int | None:
        """omega * p when the adjunction happens, else None."""
        if not self.adjoin_sqrt_omega_p:
            return None
        return signed_prime(self.p).sign * self.p

    @property
    def is_real(self) -> bool:
        if not self.base.is_real:
            return False
        return not self.adjoin_sqrt_omega_p or signed_prime(self.p).sign == 1

    def to_dict(self) -> dict:
        return {
            "d": self.base.d,
            "stab": list(self.base.stab),
            "degree": self.degree,
            "adjoin_sqrt_omega_p": self.adjoin_sqrt_omega_p,
            "real": self.is_real,
        }


def character_field(g: GroupSpec, cls: SemisimpleClass) -> CharacterField:
    """Field of every character in the series of cls.

    Orthogonal families: the cyclotomic core alone.  Symplectic: adjoin
    sqrt(omega*p) exactly when q is not a square and -1 is an eigenvalue.
    """
    if g.family is Family.GL:
        raise InputError("gl series are out of scope here")
    if cls.group != g:
        raise InputError("class does not belong to this group")
    base = galois_stabilizer(cls)
    if g.family is Family.SP:
        adjoin = (not g.q_is_square) and cls.has_minus_one_eigenvalue()
        return CharacterField(base, adjoin, g.p)
    return CharacterField(base, False, g.p)


def is_real_series(g: GroupSpec, cls: SemisimpleClass) -> bool:
    """Are the characters of the series real-valued?

    Requires the class to be fixed by inversion (automatic for the spectra
    modelled here); symplectic groups additionally require that -1 is not an
    eigenvalue or q = 1 (mod 4).
    """
    if g.family is Family.GL:
        raise InputError("gl series are out of scope here")
    stab = galois_stabilizer(cls)
    inversion_fixed = (-1) % stab.d in stab.stab
    if g.family in (Family.SO_ODD, Family.SO_EVEN):
        return inversion_fixed
    return inversion_fixed and (
        not cls.has_minus_one_eigenvalue() or g.q % 4 == 1
    )


def cuspidal_fixed(g: GroupSpec, cls: SemisimpleClass, sigma: GaloisElement) -> bool:
    """Is a cuspidal symplectic character in the series of an order <= 2
    class fixed by sigma?  Yes iff the class is the identity (unipotent
    characters are rational) or k is a square in F_q."""
    if g.family is not Family.SP:
        raise InputError("cuspidal criterion is for symplectic groups")
    if not cls.is_quasi_isolated():
        raise InputError("criterion applies to order <= 2 classes")
    if order_of(cls) == 1:
        return True
    return is_square_in_fq(sigma.k, g.q)


def _series_size_rank1(cls: SemisimpleClass) -> int:
    # Sp_2: the identity series holds the two unipotent characters, each
    # involution series holds two half-discrete characters, and every
    # regular semisimple class carries a single character.
    return 2 if order_of(cls) <= 2 else 1


def predicted_fixed_count_rank1(q: int, k: int) -> int:
    """Number of irreducible characters of the rank-one symplectic group
    fixed by the Galois element zeta -> zeta**k, assembled purely from the
    field formulas: series stabilisers plus the Gauss-sum sign.

    This is the quantity that Brauer's permutation lemma equates with the
    number of conjugacy classes fixed by g -> g**k.
    """
    g = GroupSpec(Family.SP, 1, q)
    if gcd(k, q * (q * q - 1)) != 1:
        raise InputError("k must be coprime to the group order")
    m = lcm(4 * g.p, q * q - 1)
    sigma = GaloisElement(k % m, m)
    total = 0
    for cls in enumerate_classes(g, max_d=q + 1):
        if sigma_image(cls, sigma) != cls:
            continue
        field = character_field(g, cls)
        if field.adjoin_sqrt_omega_p and gauss_sqrt_sign(sigma, g.p) != 1:
            continue
        total += _series_size_rank1(cls)
    return total
