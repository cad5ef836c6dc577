"""Integrand families and the cumulative transform Phi(u) = integral of phi."""

from mvfix import (
    ConstantIntegrand,
    ExponentialIntegrand,
    PowerIntegrand,
    adaptive_simpson,
    capital_phi,
    expression_integrand,
    integrand_label,
    phi_eval,
)

kinds = [
    ConstantIntegrand(1.0),            # Phi(u) = u
    PowerIntegrand(p=1.0, scale=2.0),  # phi = 2t, Phi(u) = u^2
    PowerIntegrand(p=-0.5),            # integrable singularity at 0
    ExponentialIntegrand(rate=1.0),    # Phi(u) = e^u - 1
    expression_integrand("1 + t*t"),   # parsed expression, Simpson under the hood
]

for f in kinds:
    print(f"{integrand_label(f):28s} phi(0.5) = {phi_eval(f, 0.5):.6f}"
          f"   Phi(0.5) = {capital_phi(f, 0.5):.10f}")

# the transform is strictly increasing and vanishes only at 0
f = PowerIntegrand(p=1.0, scale=2.0)
print("\nPhi values for phi = 2t:", [capital_phi(f, u) for u in (0.0, 0.5, 1.0, 2.0)])

# closed forms and quadrature agree; here is the numeric route on its own
g = expression_integrand("exp(-t) + t^2")
numeric = adaptive_simpson(lambda t: phi_eval(g, t), 0.0, 2.0)
exact = (1.0 - 2.718281828459045**-2.0) + 8.0 / 3.0
print(f"\nintegral of exp(-t)+t^2 over [0,2]: simpson {numeric:.12f} vs exact {exact:.12f}")

# validation refuses integrands that are not positive away from 0
for bad in ("t - 50", "max(0, t - 1)"):
    try:
        expression_integrand(bad)
    except Exception as err:
        print(f"rejected {bad!r}: {err}")
