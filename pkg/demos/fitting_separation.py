"""Two modules the group-ring Fitting ideal cannot tell apart.

Over R = (Z/p^k)[delta][T]/(delta^p - 1, T^N), the modules

    N = R / (tau, T)^2          (tau = delta - 1)
    M = R/(tau, T) (+) R/(tau, T)

both have Fitting ideal (tau, T)^2.  Restricting scalars to the
coefficient ring (Z/p^k)[T]/(T^N) separates them: the coefficient-level
Fitting ideals come out as (p, T) T^2 versus (T^2).  This script
computes all four ideals and prints their canonical generators.
"""

from iwafit import (
    GroupRingSpec,
    Ideal,
    PresentedModule,
    const,
    delta,
    fitting_ideal,
    ideal_equal,
    ideal_pow,
    matrix_from_rows,
    one,
    tvar,
    zero,
)
from iwafit.cli import ideal_generators_text


def show(label, ideal):
    print(f"  {label}: ({', '.join(ideal_generators_text(ideal))})")


def main():
    p, k, N = 3, 4, 6
    spec = GroupRingSpec(p, k, (p,), 1, N)
    flat = GroupRingSpec(p, k, (), 1, N)
    tau = delta(spec, 1) - one(spec)
    t = tvar(spec, 1)

    pres_n = matrix_from_rows(spec, [[tau * tau, tau * t, t * t]])
    pres_m = matrix_from_rows(spec, [[tau, t, const(spec, 0), const(spec, 0)],
                                     [const(spec, 0), const(spec, 0), tau, t]])
    fit_n = fitting_ideal(PresentedModule(pres_n))
    fit_m = fitting_ideal(PresentedModule(pres_m))
    target = ideal_pow(Ideal(spec, [tau, t]), 2)
    print(f"over the group ring (p={p}, k={k}, N={N}):")
    show("Fitt(N)", fit_n)
    show("Fitt(M)", fit_m)
    print(f"  equal to (tau, T)^2: {ideal_equal(fit_n, target)} and "
          f"{ideal_equal(fit_m, target)}")

    tf, zf = tvar(flat, 1), zero(flat)
    coeff_n = matrix_from_rows(flat, [[tf * tf, zf, zf], [zf, const(flat, p), tf]])
    coeff_m = matrix_from_rows(flat, [[tf, zf], [zf, tf]])
    fit_cn = fitting_ideal(PresentedModule(coeff_n))
    fit_cm = fitting_ideal(PresentedModule(coeff_m))
    print("over the coefficient ring:")
    show("Fitt(N)", fit_cn)
    show("Fitt(M)", fit_cm)
    print(f"  the coefficient-level ideals differ: "
          f"{not ideal_equal(fit_cn, fit_cm)}")


if __name__ == "__main__":
    main()
