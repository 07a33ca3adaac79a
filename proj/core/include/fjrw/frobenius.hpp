#pragma once

// The quantum Euler class along the t*alpha_2 line, its multiplication
// matrix, and the semisimplicity verdict. Fermat systems with central charge
// >= 1 are fully evaluated; chain and loop systems keep their undetermined
// four-point coefficients symbolic.

#include <fjrw/correlator.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fjrw {

/// lambda = delta*w1*w2 - w1 - w2 - delta.
long long lambda_invariant(const WeightSystem& ws);

Rational c5_closed_form(const WeightSystem& ws);  // w1*w2/d^2

/// The five-point invariant <alpha_{d-1}, alpha_{d-2}, alpha_2, alpha_2,
/// alpha_2> evaluated through the geometric pipeline and checked against the
/// closed form; a disagreement is a pipeline_mismatch.
Rational c5(const WeightSystem& ws, PolyType t);

/// <alpha_{d-1}, alpha_{d-i}, alpha_i, alpha_2, alpha_2> for narrow i
/// outside {1, d-1}; equals c5 for every such i (Fermat).
Rational five_point_narrow(const WeightSystem& ws, long long i);

/// <beta_j, beta^j, alpha_{d-1}, alpha_2, alpha_2> = -c5 (Fermat).
Rational five_point_broad(const WeightSystem& ws, long long j);

struct QuantumEulerCoefficients {
  std::vector<BasisElement> basis;
  std::vector<Rational> B;  // per basis element (Fermat: evaluated)
  std::map<std::pair<long long, long long>, std::string> A_symbols;  // (i, k) -> name
  Rational C_d;
  long long lambda = 0;
  Rational sum_B;  // direct summation; equals lambda * C_d
};

QuantumEulerCoefficients euler_coefficients(const WeightSystem& ws, PolyType t);

/// One coordinate of the Euler class: a polynomial in t plus formal
/// multiples of named unknowns (chain/loop four-point coefficients).
struct EulerTerm {
  RatPoly known;
  std::vector<std::pair<std::string, RatPoly>> symbolic;
  bool is_known() const { return symbolic.empty(); }
  std::string str() const;
};

struct EulerClass {
  std::vector<BasisElement> basis;
  std::vector<EulerTerm> coeff;  // aligned with basis
  // Fermat bookkeeping: the closed form puts lambda*C_d*t^2 on alpha_1; the
  // direct summation (t^2/2) * sum_i B_i gives half of that. Both are kept.
  RatPoly alpha1_closed;
  RatPoly alpha1_direct;
  Rational sum_B;
};

EulerClass euler_class(const WeightSystem& ws, PolyType t);

/// Multiplication by the Euler class at t*alpha_2, Fermat only: a 2x2 block
/// on span{alpha_1, alpha_{d-1}} plus scalar blocks on the remaining narrow
/// lines and on the broad subspace.
struct EulerMatrix {
  RatPoly block[2][2];
  RatPoly narrow_diag;  // (lambda + mu/2) C_d t^2
  long long narrow_mult = 0;
  RatPoly broad_diag;  // (lambda - mu/2) C_d t^2
  long long broad_mult = 0;
  RatPoly block_det;
  RatPoly determinant;  // block_det * narrow_diag^mult * broad_diag^mult
};

EulerMatrix euler_multiplication_matrix(const WeightSystem& ws);

/// The seven-point identity tying <alpha_{d-1}^3, alpha_2^4> to the square
/// of the defining five-point invariant; an exact identity in C_d.
bool seven_point_check(const WeightSystem& ws);

enum class Verdict { semisimple, inconclusive, conjectured_only, small_charge_semisimple };

const char* verdict_name(Verdict v);

/// Which small-charge argument applies (central charge < 1).
enum class SmallChargeFamily {
  none,
  ade_list,            // chain families x^{n-1}+x*y^2, x^{n-1}*y+y^2, x^3+x*y^3; Fermat x^3+y^{3,4,5}
  fermat_two_variable, // x^m + y^2
  loop_to_chain,       // x^m*y + x*y^2
  idempotent_pair,     // x^2 + y^2
};

const char* family_name(SmallChargeFamily f);

struct SemisimplicityReport {
  InvertiblePolynomial poly;
  WeightSystem ws;
  MilnorCounts mu;
  Verdict verdict = Verdict::inconclusive;
  SmallChargeFamily family = SmallChargeFamily::none;
  std::optional<Rational> C_d;
  std::optional<long long> lambda;
  std::optional<Rational> lambda_plus;   // lambda + mu/2
  std::optional<Rational> lambda_minus;  // lambda - mu/2
  std::optional<Rational> sum_B;
  std::vector<std::string> citations;
};

SemisimplicityReport semisimplicity_verdict(const InvertiblePolynomial& p);

}  // namespace fjrw
