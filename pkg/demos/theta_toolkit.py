"""Theta sums, their product forms, and the classical building blocks."""

from sevencores.theta import (
    ThetaArgs,
    chi_neg,
    eta_quotient,
    euler_E,
    jacobi_cube,
    phi,
    psi,
    sigma,
    theta_f,
    triple_product,
)

N = 30

# a two-variable theta section: f(q, q^13) shows up in 7-core dissections
args = ThetaArgs(1, 1, 1, 13)
by_sum = theta_f(args, N)
by_product = triple_product(args, N)
print("f(q, q^13) as a bilateral sum:  ", by_sum.coeffs[:16])
print("f(q, q^13) as a triple product: ", by_product.coeffs[:16])
assert by_sum == by_product

# phi and psi are the square and triangular sums
print("phi(q):", phi(1, 12).coeffs)
print("psi(q):", psi(1, 12).coeffs)
assert psi(1, N) ** 2 == psi(2, N) * phi(1, N)
print("psi(q)^2 == psi(q^2) * phi(q) holds to order", N)

# chi is the odd-spaced product E(q)/E(q^2)
print("chi(-q):", chi_neg(1, 8).coeffs)

# eta-style quotients assemble from one dict
g = eta_quotient({7: 7, 1: -1}, 10)
print("E(q^7)^7/E(q):", g.coeffs)

# the cube of the Euler product has a closed coefficient law
print("E(q)^3 matches its indexed sum:", jacobi_cube(N) == euler_E(1, N) ** 3)

# sigma packs two theta products into one even-looking series
print("sigma head:", sigma(8).coeffs)
