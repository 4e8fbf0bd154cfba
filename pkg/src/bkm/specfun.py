"""Bessel functions of the first kind (J0, J1) and modified first kind (I0, I1).

Scalar, dependency-free implementations sized for collocation kernels:
absolute error below 1e-12 for |x| <= 50 on the J functions, relative
error below 1e-12 for |x| <= 100 on the I functions.  Small arguments
are summed by Taylor series; beyond |x| = 5 the J functions switch to
the Hankel asymptotic form with the rational coefficient tables from
the Cephes math library (S. L. Moshier, release 2.1, 1989).
"""

from __future__ import annotations

import math

__all__ = ["bessel_j0", "bessel_j1", "bessel_i0", "bessel_i1"]

# Beyond this magnitude the I-function values exceed ~1e42 and callers are
# better served by an explicit error than by a silent loss of meaning.
_I_RANGE_MAX = 100.0

# Taylor terms are added until they drop below these floors; both series
# terminate in well under 200 terms on the guarded argument ranges.
_J_TERM_FLOOR = 1e-19
_I_TERM_FLOOR = 1e-17

_SQ2OPI = 7.9788456080286535587989e-1  # sqrt(2/pi)
_PIO4 = 7.85398163397448309616e-1  # pi/4
_THPIO4 = 2.35619449019234492885  # 3*pi/4

# Hankel asymptotic tables for J0, |x| > 5: J0(x) ~ sqrt(2/(pi x)) *
# (P(25/x^2) cos(x - pi/4) - (5/x) Q(25/x^2) sin(x - pi/4)).
_PP = (
    7.96936729297347051624e-4,
    8.28352392107440799803e-2,
    1.23953371646414299388e0,
    5.44725003058768775090e0,
    8.74716500199817011941e0,
    5.30324038235394892183e0,
    9.99999999999999997821e-1,
)
_PQ = (
    9.24408810558863637013e-4,
    8.56288474354474431428e-2,
    1.25352743901058953537e0,
    5.47097740330417105182e0,
    8.76190883237069594232e0,
    5.30605288235394617618e0,
    1.00000000000000000218e0,
)
_QP = (
    -1.13663838898469149931e-2,
    -1.28252718670509318512e0,
    -1.95539544257735972385e1,
    -9.32060152123768231369e1,
    -1.77681167980488050595e2,
    -1.47077505154951170175e2,
    -5.14105326766599330220e1,
    -6.05014350600728481186e0,
)
_QQ = (  # leading coefficient 1.0 handled by _p1evl
    6.43178256118178023184e1,
    8.56430025976980587198e2,
    3.88240183605401609683e3,
    7.24046774195652478189e3,
    5.93072701187316984827e3,
    2.06209331660327847417e3,
    2.42005740240291393179e2,
)

# Hankel asymptotic tables for J1, |x| > 5 (phase x - 3*pi/4).
_PP1 = (
    7.62125616208173112003e-4,
    7.31397056940917570436e-2,
    1.12719608129684925192e0,
    5.11207951146807644818e0,
    8.42404590141772420927e0,
    5.21451598682361504063e0,
    1.00000000000000000254e0,
)
_PQ1 = (
    5.71323128072548699714e-4,
    6.88455908754495404082e-2,
    1.10514232634061696926e0,
    5.07386386128601488557e0,
    8.39985554327604159757e0,
    5.20982848682361821619e0,
    9.99999999999999997461e-1,
)
_QP1 = (
    5.10862594750176621635e-2,
    4.98213872951233449420e0,
    7.58238284132545283818e1,
    3.66779609360150777800e2,
    7.10856304998926107277e2,
    5.97489612400613639965e2,
    2.11688757100572135698e2,
    2.52070205858023719784e1,
)
_QQ1 = (  # leading coefficient 1.0 handled by _p1evl
    7.42373277035675149943e1,
    1.05644886038262816351e3,
    4.98641058337653607651e3,
    9.56231892404756170795e3,
    7.99704160447350683650e3,
    2.82619278517639096600e3,
    3.36093607810698293419e2,
)


def _polevl(x: float, coef: tuple[float, ...]) -> float:
    """Evaluate coef[0]*x^N + ... + coef[N] by Horner's rule."""
    ans = coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _p1evl(x: float, coef: tuple[float, ...]) -> float:
    """Evaluate x^N + coef[0]*x^(N-1) + ... + coef[N-1] (implicit leading 1)."""
    ans = x + coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _require_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"Bessel argument must be finite, got {x!r}")
    return x


def bessel_j0(x: float) -> float:
    """Bessel function of the first kind, order zero.

    Parameters
    ----------
    x : float
        Finite argument; negative values use the evenness J0(-x) = J0(x).

    Returns
    -------
    float
        J0(x), absolute error <= 1e-12 for |x| <= 50.

    Raises
    ------
    ValueError
        If ``x`` is NaN or infinite.
    """
    x = _require_finite(x)
    ax = abs(x)
    if ax <= 5.0:
        q = 0.25 * ax * ax
        term = 1.0
        total = 1.0
        k = 1
        while abs(term) > _J_TERM_FLOOR:
            term *= -q / (k * k)
            total += term
            k += 1
        return total
    w = 5.0 / ax
    z = 25.0 / (ax * ax)
    p = _polevl(z, _PP) / _polevl(z, _PQ)
    q = _polevl(z, _QP) / _p1evl(z, _QQ)
    xn = ax - _PIO4
    return _SQ2OPI * (p * math.cos(xn) - w * q * math.sin(xn)) / math.sqrt(ax)


def bessel_j1(x: float) -> float:
    """Bessel function of the first kind, order one.

    Parameters
    ----------
    x : float
        Finite argument; negative values use the oddness J1(-x) = -J1(x).

    Returns
    -------
    float
        J1(x), absolute error <= 1e-12 for |x| <= 50.

    Raises
    ------
    ValueError
        If ``x`` is NaN or infinite.
    """
    x = _require_finite(x)
    ax = abs(x)
    if ax <= 5.0:
        q = 0.25 * ax * ax
        term = 1.0
        total = 1.0
        k = 1
        while abs(term) > _J_TERM_FLOOR:
            term *= -q / (k * (k + 1))
            total += term
            k += 1
        return 0.5 * x * total
    w = 5.0 / ax
    z = 25.0 / (ax * ax)
    p = _polevl(z, _PP1) / _polevl(z, _PQ1)
    q = _polevl(z, _QP1) / _p1evl(z, _QQ1)
    xn = ax - _THPIO4
    ans = _SQ2OPI * (p * math.cos(xn) - w * q * math.sin(xn)) / math.sqrt(ax)
    return -ans if x < 0.0 else ans


def bessel_i0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero.

    Parameters
    ----------
    x : float
        Finite argument with |x| <= 100; even in x.

    Returns
    -------
    float
        I0(x), relative error <= 1e-12.

    Raises
    ------
    ValueError
        If ``x`` is NaN or infinite.
    OverflowError
        If |x| > 100 (value would exceed the guarded range).
    """
    x = _require_finite(x)
    if abs(x) > _I_RANGE_MAX:
        raise OverflowError(f"bessel_i0 argument out of range: |{x!r}| > {_I_RANGE_MAX}")
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    k = 1
    while term > _I_TERM_FLOOR * total:
        term *= q / (k * k)
        total += term
        k += 1
    return total


def bessel_i1(x: float) -> float:
    """Modified Bessel function of the first kind, order one.

    Parameters
    ----------
    x : float
        Finite argument with |x| <= 100; odd in x.

    Returns
    -------
    float
        I1(x), relative error <= 1e-12.

    Raises
    ------
    ValueError
        If ``x`` is NaN or infinite.
    OverflowError
        If |x| > 100 (value would exceed the guarded range).
    """
    x = _require_finite(x)
    if abs(x) > _I_RANGE_MAX:
        raise OverflowError(f"bessel_i1 argument out of range: |{x!r}| > {_I_RANGE_MAX}")
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    k = 1
    while term > _I_TERM_FLOOR * total:
        term *= q / (k * (k + 1))
        total += term
        k += 1
    return 0.5 * x * total
