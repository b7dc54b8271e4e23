"""Generate the embedded Daubechies filter table (crates/core/src/filters/table.rs).

Coefficients come from the classical spectral factorization of the
Daubechies polynomial, carried out at 80 significant digits, keeping the
minimum-phase roots and normalizing so the coefficients sum to 2.
Each coefficient is stored as an unevaluated pair (hi, lo) of binary64
values with hi = round(c) and lo = round(c - hi).
"""
import mpmath as mp

mp.mp.dps = 80


def filter_coefficients(p):
    # P(y) = sum_{k<p} binom(p-1+k, k) y^k, y = sin^2(w/2)
    poly = [mp.binomial(p - 1 + k, k) for k in range(p)]
    zs = []
    if p > 1:
        ys = mp.polyroots(list(reversed(poly)), maxsteps=500, extraprec=400)
        for y in ys:
            # z + 1/z = 2 - 4y
            b = 2 - 4 * y
            disc = mp.sqrt(b * b - 4)
            z1, z2 = (b + disc) / 2, (b - disc) / 2
            zs.append(z1 if abs(z1) < 1 else z2)
    coeffs = [mp.mpc(1)]
    for _ in range(p):
        coeffs = poly_mul(coeffs, [mp.mpc(1), mp.mpc(1)])
    for z in zs:
        coeffs = poly_mul(coeffs, [-z, mp.mpc(1)])
    coeffs = [mp.re(c) for c in coeffs]
    coeffs.reverse()
    s = sum(coeffs)
    return [2 * c / s for c in coeffs]


def poly_mul(a, b):
    out = [mp.mpc(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def split(c):
    hi = float(c)
    lo = float(c - mp.mpf(hi))
    return hi, lo


def check(p, c):
    n = len(c)
    for m in range(0, p):
        r = sum(c[k] * c[k + 2 * m] for k in range(n - 2 * m))
        want = 2 if m == 0 else 0
        assert abs(r - want) < mp.mpf(10) ** -60, (p, m, r)
    for m in range(p):
        r = sum((-1) ** k * mp.mpf(k) ** m * c[k] for k in range(n))
        assert abs(r) < mp.mpf(10) ** -40, (p, m, r)


def main():
    out = []
    out.append("// Generated by scripts/gen_filters.py. Do not edit by hand.\n")
    out.append("//\n// Daubechies filters normalized to sum 2, stored as (hi, lo) binary64 pairs.\n\n")
    out.append("pub(crate) static FILTERS: [&[(f64, f64)]; 18] = [\n")
    for p in range(2, 20):
        c = filter_coefficients(p)
        check(p, c)
        out.append(f"    // p = {p}\n    &[\n")
        for x in c:
            hi, lo = split(x)
            out.append(f"        ({hi!r}, {lo!r}),\n")
        out.append("    ],\n")
    out.append("];\n")
    print("".join(out), end="")


if __name__ == "__main__":
    main()
