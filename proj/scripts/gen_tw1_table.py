#!/usr/bin/env python3
"""Generate the Tracy-Widom (beta=1) cdf table asset and its embedded C++ copy.

Two independent numerical routes are computed and cross-checked:

  1. Fredholm determinant of the Airy kernel on L^2(0, inf):
         F1(s) = det(I - A_s),   A_s(x, y) = Ai(x + y + s),
     discretized with Gauss-Legendre quadrature (Nystrom method). This is
     the primary route; it is uniformly accurate over the whole grid.

  2. Hastings-McLeod solution of Painleve II:
         q'' = s q + 2 q^3,  q(s) ~ Ai(s) as s -> +inf,
         F2(s) = exp(-int_s^inf (x - s) q(x)^2 dx),
         F1(s) = exp(-0.5 int_s^inf q(x) dx) * sqrt(F2(s)),
     integrated with an implicit high-order ODE solver. The backward
     integration is ill-conditioned in the far left tail, so the
     cross-check is restricted to s in [-8, 6].

The script also validates mean/variance against the published reference
values (mean -1.2065335745820, variance 1.6077810345813) and refuses to
emit anything on disagreement.

Outputs:
  data/tw1_cdf_b1.txt     -- versioned two-column text asset (x, cdf)
  src/tw1_table_data.cpp  -- same table embedded for the library
  stdout                  -- frozen probe values for the acceptance suite
"""

import sys
import pathlib
import numpy as np
from scipy.special import airy
from scipy.integrate import solve_ivp, quad

ROOT = pathlib.Path(__file__).resolve().parent.parent

GRID_LO = -10.0
GRID_HI = 8.2
GRID_STEP = 0.02

REF_MEAN = -1.2065335745820
REF_VAR = 1.6077810345813

TABLE_VERSION = "tw1-b1-v1"


def f1_fredholm(svals, m=240):
    """F1 at each s via det(I - A_s) with m-point Gauss-Legendre Nystrom."""
    svals = np.atleast_1d(np.asarray(svals, dtype=float))
    out = np.empty_like(svals)
    for idx, s in enumerate(svals):
        # Truncate [0, inf) where Ai(x + y + s) is negligible (y >= 0).
        upper = max(14.0, 17.0 - s)
        nodes, weights = np.polynomial.legendre.leggauss(m)
        x = 0.5 * upper * (nodes + 1.0)
        w = 0.5 * upper * weights
        ai = airy(np.add.outer(x, x) + s)[0]
        sw = np.sqrt(w)
        kmat = sw[:, None] * ai * sw[None, :]
        sign, logdet = np.linalg.slogdet(np.eye(m) - kmat)
        if sign <= 0:
            raise RuntimeError(f"non-positive determinant at s={s}")
        out[idx] = np.exp(logdet)
    return out if out.size > 1 else out[0]


def f1_painleve(svals, s_start=9.0):
    """Cross-check route: Painleve II with tracked tail integrals.

    State y = [q, q', E, Q, J] with
      E(s) = int_s^inf q dx          E' = -q
      Q(s) = int_s^inf q^2 dx        Q' = -q^2
      J(s) = int_s^inf (x-s) q^2 dx  J' = -Q
    """
    ai0, aip0, _, _ = airy(s_start)
    e0 = quad(lambda t: airy(t)[0], s_start, s_start + 40.0)[0]
    # int_s^inf Ai^2 = Ai'(s)^2 - s Ai(s)^2
    q0 = aip0 ** 2 - s_start * ai0 ** 2
    # int_s^inf x Ai^2 dx = (s Ai'^2 - s^2 Ai^2 - Ai Ai') / 3
    g0 = (s_start * aip0 ** 2 - s_start ** 2 * ai0 ** 2 - ai0 * aip0) / 3.0
    j0 = g0 - s_start * q0

    def rhs(s, y):
        q, qp, _, qq, _ = y
        return [qp, s * q + 2.0 * q ** 3, -q, -(q ** 2), -qq]

    svals = np.atleast_1d(np.asarray(svals, dtype=float))
    order = np.argsort(svals)[::-1]  # integrate downward
    sol = solve_ivp(
        rhs,
        (s_start, float(svals.min()) - 1e-9),
        [ai0, aip0, e0, q0, j0],
        method="Radau",
        rtol=1e-12,
        atol=1e-16,
        dense_output=True,
    )
    if not sol.success:
        raise RuntimeError("Painleve II integration failed: " + sol.message)
    out = np.empty_like(svals)
    for i in order:
        q, qp, e, qq, j = sol.sol(svals[i])
        out[i] = np.exp(-0.5 * e) * np.sqrt(np.exp(-j))
    return out if out.size > 1 else out[0]


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main():
    # --- cross-check the two routes -------------------------------------
    probe = np.arange(-8.0, 6.0 + 1e-9, 0.5)
    f_fred = f1_fredholm(probe)
    f_pain = f1_painleve(probe)
    gap = np.max(np.abs(f_fred - f_pain))
    print(f"route cross-check: max |Fredholm - Painleve| on [-8,6] = {gap:.3e}")
    if gap > 1e-8:
        sys.exit("FATAL: independent TW1 routes disagree")

    # quadrature self-consistency (m-refinement)
    f_hi = f1_fredholm(probe, m=360)
    refine = np.max(np.abs(f_fred - f_hi))
    print(f"quadrature refinement check: {refine:.3e}")
    if refine > 1e-12:
        sys.exit("FATAL: Fredholm quadrature not converged")

    # --- full fine grid for moments -------------------------------------
    # mass below -11 is ~1e-25, irrelevant at the target accuracy
    fine = np.arange(-11.0, 9.0 + 1e-9, 0.01)
    f_fine = f1_fredholm(fine)

    # tail-integral moment formulas, composite Simpson
    def simpson(y, x):
        from scipy.integrate import simpson as simps
        return simps(y, x=x)

    neg = fine <= 1e-9  # the grid point at s=0 must land in both halves
    pos = fine >= -1e-9
    mean = simpson(1.0 - f_fine[pos], fine[pos]) - simpson(f_fine[neg], fine[neg])
    ex2 = simpson(2.0 * fine[pos] * (1.0 - f_fine[pos]), fine[pos]) + simpson(
        -2.0 * fine[neg] * f_fine[neg], fine[neg]
    )
    var = ex2 - mean ** 2
    sd = np.sqrt(var)
    print(f"computed mean = {mean:.12f}   (reference {REF_MEAN})")
    print(f"computed var  = {var:.12f}   (reference {REF_VAR})")
    if abs(mean - REF_MEAN) > 1e-8 or abs(var - REF_VAR) > 1e-8:
        sys.exit("FATAL: moments disagree with published reference values")

    # --- shipped grid ----------------------------------------------------
    npts = int(round((GRID_HI - GRID_LO) / GRID_STEP)) + 1
    xs = GRID_LO + GRID_STEP * np.arange(npts)
    cdf = f1_fredholm(xs)
    assert np.all(np.diff(cdf) > 0.0), "cdf not strictly increasing"
    assert cdf[0] <= 1e-8 and cdf[-1] >= 1.0 - 1e-8, "endpoint mass too large"

    data_lines = []
    for x, f in zip(xs, cdf):
        data_lines.append(f"{x:.6f} {f:.14e}\n")
    payload = "".join(data_lines).encode()
    checksum = fnv1a64(payload)

    data_path = ROOT / "data" / "tw1_cdf_b1.txt"
    data_path.parent.mkdir(parents=True, exist_ok=True)
    with open(data_path, "w") as fh:
        fh.write(f"# {TABLE_VERSION}\n")
        fh.write("# Tracy-Widom beta=1 cdf table: columns x cdf\n")
        fh.write(f"# mean {mean:.12f}\n")
        fh.write(f"# sd {sd:.12f}\n")
        fh.write(f"# fnv1a64 {checksum:016x}\n")
        fh.write(payload.decode())
    print(f"wrote {data_path} ({npts} points)")

    cpp_path = ROOT / "src" / "tw1_table_data.cpp"
    cpp_path.parent.mkdir(parents=True, exist_ok=True)
    with open(cpp_path, "w") as fh:
        fh.write("// Generated by scripts/gen_tw1_table.py -- do not edit.\n")
        fh.write("#include \"sbmtest/tw1.hpp\"\n\n")
        fh.write("namespace sbmtest::detail {\n\n")
        fh.write(f"const char* const kTw1TableVersion = \"{TABLE_VERSION}\";\n")
        fh.write(f"const double kTw1Mean = {mean:.12f};\n")
        fh.write(f"const double kTw1Sd = {sd:.12f};\n")
        fh.write(f"const char* const kTw1ChecksumHex = \"{checksum:016x}\";\n")
        fh.write(f"const std::size_t kTw1GridSize = {npts};\n\n")
        fh.write("const double kTw1GridX[] = {\n")
        for i in range(0, npts, 6):
            fh.write("    " + ", ".join(f"{v:.6f}" for v in xs[i : i + 6]) + ",\n")
        fh.write("};\n\n")
        fh.write("const double kTw1GridCdf[] = {\n")
        for i in range(0, npts, 4):
            fh.write("    " + ", ".join(f"{v:.14e}" for v in cdf[i : i + 4]) + ",\n")
        fh.write("};\n\n")
        fh.write("}  // namespace sbmtest::detail\n")
    print(f"wrote {cpp_path}")

    # --- frozen values for the acceptance suite -------------------------
    probe_x = np.array(
        [
            -9.713, -8.421, -7.037, -6.284, -5.551, -4.903, -4.317, -3.731,
            -3.137, -2.618, -2.003, -1.507, -1.206, -0.914, -0.453, 0.017,
            0.487, 0.979, 1.523, 2.041, 2.617, 3.209, 4.113, 5.407, 6.893,
        ]
    )
    probe_f = f1_fredholm(probe_x)
    print("\n// frozen TW1 probe points (x, cdf): acceptance oracle")
    for x, f in zip(probe_x, probe_f):
        print(f"    {{{x:.3f}, {f:.12e}}},")

    from scipy.optimize import brentq

    def quant(p):
        return brentq(lambda s: f1_fredholm(s) - p, -11.0, 8.5, xtol=1e-12)

    print("\n// frozen TW1 quantiles")
    for p in [0.5, 0.95, 0.975, 0.99, 0.995, 0.99995]:
        print(f"    q({p}) = {quant(p):.12f}")
    print(f"\n    mean = {mean:.12f}")
    print(f"    sd   = {sd:.12f}")


if __name__ == "__main__":
    main()
