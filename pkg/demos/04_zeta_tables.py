"""The three coefficient tables and the convolution identity tying them
together: counting all classes gives sigma, counting primitive classes gives
psi, and sigma(n) = sum of psi(n/d^2) over square divisors."""

from m2z import (
    axpb_count,
    count_classes_by_det,
    count_primitive_by_det,
    dirichlet_convolve,
    psi_coeffs,
    sigma_coeffs,
    square_indicator_coeffs,
)

N = 16
sigma = sigma_coeffs(N)
psi = psi_coeffs(N)
counted = count_classes_by_det(N)
primitive = count_primitive_by_det(N)
axpb = axpb_count(N)

print(f"{'n':>3} {'sigma':>6} {'#classes':>9} {'psi':>5} {'#primitive':>11} {'ax+b':>5}")
for n in range(1, N + 1):
    print(
        f"{n:>3} {sigma.value(n):>6} {counted.value(n):>9} "
        f"{psi.value(n):>5} {primitive.value(n):>11} {axpb.value(n):>5}"
    )

conv = dirichlet_convolve(square_indicator_coeffs(N), psi_coeffs(N))
print("\nsigma as the convolution (squares indicator) * psi:")
for n in (4, 12, 16):
    terms = [f"psi({n}/{d*d})" for d in range(1, n + 1) if d * d <= n and n % (d * d) == 0]
    print(f"  sigma({n}) = {' + '.join(terms)} = {conv.value(n)} (sigma table: {sigma.value(n)})")

mismatches = sum(1 for n in range(1, N + 1) if conv.value(n) != sigma.value(n))
print(f"\nmismatches up to {N}: {mismatches}")
