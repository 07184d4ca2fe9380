#pragma once

#include <utility>
#include <vector>

#include "bv/polynomial.hpp"
#include "bv/rational.hpp"
#include "bv/report.hpp"

namespace bv {

/// One factor of a Bernstein product: basis(k, degree) raised to power.
struct BernsteinFactor {
    Nat k = 0;
    Nat degree = 0;
    Nat power = 1;
};

/// Integral of B_{k,n}: the two closed forms against direct integration.
IdentityReport integral_bernstein_two_ways(Nat k, Nat n);

/// Binomial-stripped equality of the two closed forms, plus the direct
/// integral of B_{k,n} as an independent cross-check.
IdentityReport verify_prop_2_1(Nat n, Nat k);

/// I1((1-x)^n) = I1(x^n) + n, n >= 2.
IdentityReport verify_thm_2_2(Nat n);

/// The n = 1 boundary case of the previous identity, where it fails:
/// returns the exact counterexample pair (3/2, 1/2) as a FAIL report.
IdentityReport thm_2_2_boundary_diagnostic();

/// B_n(2) = B_n + n, n >= 2.
IdentityReport verify_bn2(Nat n);

/// (-1)^n B_n(x) = B_n(1-x) as exact polynomials.
IdentityReport verify_reflection(Nat n);

/// I1(x^{n-k} (1-x)^k) = sum_l C(n-k,l) (-1)^l (B_{l+k} + l + k), k >= 2.
IdentityReport verify_cor_2_3(Nat n, Nat k);

/// Product of same-k bases with unit powers.
IdentityReport verify_thm_2_4(Nat k, const std::vector<Nat>& degrees);

/// Product of same-k bases with powers.
IdentityReport verify_thm_2_5(Nat k, const std::vector<std::pair<Nat, Nat>>& spec);

/// Fully general product of bases.
IdentityReport verify_thm_2_6(const std::vector<BernsteinFactor>& spec);

}  // namespace bv
