"""Independent reference computations used by the tests.

None of these call into ncwell.
"""

import mpmath as mp

# CODATA 2022 values, typed in rather than imported
HBAR = mp.mpf("6.62607015e-34") / (2 * mp.pi)  # h is exact in the SI
NEUTRON_MASS = mp.mpf("1.67492750056e-27")
EV = mp.mpf("1.602176634e-19")


def airy_ai_series(z, terms=80):
    """Ai(z) from its Maclaurin series, evaluated in mpmath precision."""
    with mp.workdps(50):
        z = mp.mpf(z)
        c1 = 1 / (mp.mpf(3) ** (mp.mpf(2) / 3) * mp.gamma(mp.mpf(2) / 3))
        c2 = 1 / (mp.mpf(3) ** (mp.mpf(1) / 3) * mp.gamma(mp.mpf(1) / 3))
        f = g = mp.mpf(0)
        tf, tg = mp.mpf(1), z
        for k in range(max(terms, 40)):
            f += tf
            g += tg
            tf *= z**3 / ((3 * k + 2) * (3 * k + 3))
            tg *= z**3 / ((3 * k + 3) * (3 * k + 4))
        return c1 * f - c2 * g


def airy_zeros_by_bisection(count, z_max=12.0, step=0.05):
    """First ``count`` zeros of Ai(-z) by sign scan then 120 bisection steps."""
    zeros = []
    lo = mp.mpf("0.5")
    f_lo = airy_ai_series(-lo)
    while len(zeros) < count and lo < z_max:
        hi = lo + step
        f_hi = airy_ai_series(-hi)
        if (f_lo > 0) != (f_hi > 0):
            a, b, fa = lo, hi, f_lo
            for _ in range(120):
                mid = (a + b) / 2
                fm = airy_ai_series(-mid)
                if (fm > 0) == (fa > 0):
                    a, fa = mid, fm
                else:
                    b = mid
            zeros.append(float((a + b) / 2))
        lo, f_lo = hi, f_hi
    return zeros


# alpha_1..alpha_5 from the routine above, frozen
AIRY_ZEROS = (
    2.3381074104597670385,
    4.0879494441309706166,
    5.5205598280955510591,
    6.7867080900717589988,
    7.9441335871208531231,
)


def neutron_e1_ev(g=9.81):
    with mp.workdps(30):
        scale = mp.cbrt(HBAR**2 * NEUTRON_MASS * mp.mpf(g) ** 2 / 2)
        return float(scale * mp.mpf(AIRY_ZEROS[0]) / EV)
