#pragma once

// Reference tables: the degree-2 intersection numbers on the 5-marked model
// and the Bernoulli-monomial expansion of 4*c2 for the defining five-point
// invariant, scaled by 36 d^4 so that every entry is an integer and the
// grand total is 144 d^2 w1 w2.

#include <fjrw/polynomial.hpp>
#include <fjrw/taut.hpp>

#include <string>
#include <vector>

namespace fjrw {

struct IntersectionRow {
  std::string cls;
  Rational value;
};

/// Every degree-2 pairing: kappa2, kappa1^2, kappa1*psi_i, kappa1*D_K,
/// psi_i*psi_j, psi_i*D_K, D_K*D_K'.
std::vector<IntersectionRow> intersection_table();

/// The five Bernoulli groups of the defining five-point correlator, as
/// classes on the 5-marked model (insertion order alpha_2, alpha_2, alpha_2,
/// alpha_{d-2}, alpha_{d-1}):
///   b1: k1 - psi_5 + D{1,4} + D{1,2,5} + D{1,3,5}
///   b2: -(psi_1 + psi_2 + psi_3 + psi_4)
///   b3: D{1,2} + D{1,3} + D{1,4,5}
///   b4: D{1,2,3}
///   b0: D{1,5} + D{1,2,4} + D{1,3,4}
TautClass bernoulli_group_class(int group);  // group in {0,1,2,3,4}

/// Integrated coefficient of b_g^x b_h^y in the expansion of 4*c2,
/// i.e. the integral of the product of two group classes.
Rational bracket_coefficient(int g, int h);

struct MonomialRow {
  int gx = 0, hy = 0;        // group indices on the x and y side
  std::string monomial;      // e.g. "b2^x*b3^y"
  long long coefficient = 0; // integrated coefficient
  Int scaled;                // 36 d^4 * b_gx(w1) * b_hy(w2) * coefficient
};

struct MonomialTable {
  std::vector<MonomialRow> rows;  // 25 ordered (x-group, y-group) pairs
  Int total;                      // sum of scaled entries
  Int expected;                   // 144 d^2 w1 w2
  bool matches() const { return total == expected; }
};

/// b-values are the formal ones B2(k*w_j/d) regardless of whether the
/// argument stays below 1; the correction identity makes the total agree
/// with the fractional-part pipeline.
MonomialTable monomial_table(const WeightSystem& ws);

/// b-value B2(k*w/d) with w = w1 (axis 1) or w2 (axis 2).
Rational b_value(const WeightSystem& ws, int axis, int k);

}  // namespace fjrw
