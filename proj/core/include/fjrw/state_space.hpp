#pragma once

// The state space of the pair (W, <J>): narrow generators indexed by the
// set Nar, broad generators from the invariant part of the identity sector,
// complex degrees, and the dual-basis involution.

#include <fjrw/polynomial.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace fjrw {

/// A power J^m of the grading element, with its phases theta_j = {m*w_j/d}.
struct GroupElement {
  long long m = 0;  // least nonnegative representative mod d
  Rational theta1, theta2;

  bool is_identity() const { return m == 0; }
  bool is_narrow() const { return theta1 != 0 && theta2 != 0; }
};

GroupElement group_element(const WeightSystem& ws, long long m);

struct BasisElement {
  enum class Kind { narrow, broad };
  Kind kind = Kind::narrow;
  long long index = 0;    // m for alpha_m, k for beta_k
  GroupElement sector;    // identity for broad elements
  Rational degree;
  std::optional<std::pair<long long, long long>> monomial;  // broad: exponents of x,y

  bool is_narrow() const { return kind == Kind::narrow; }
};

bool operator==(const BasisElement& a, const BasisElement& b);

/// Nar = { k : 1 <= k <= d-1, d does not divide k*w1 or k*w2 }, ascending.
std::vector<long long> narrow_indices(const WeightSystem& ws);

BasisElement narrow_element(const WeightSystem& ws, long long m);
BasisElement broad_element(const WeightSystem& ws, PolyType t, long long k);

/// All alpha_m for m in Nar, then all beta_k in the type range
/// (Fermat 1..delta-1, chain 0..delta-1, loop 0..delta).
std::vector<BasisElement> basis(const WeightSystem& ws, PolyType t);

Rational degree(const BasisElement& e, const WeightSystem& ws);

/// The dual-basis involution: alpha_m <-> alpha_{d-m}; broad indices pair so
/// that monomial exponents of a pair sum to the Jacobian socle exponents
/// (Fermat and loop k <-> delta-k; chain 0 <-> 0 and k <-> delta-k for k >= 1,
/// where the k = 0 square itself reduces to the socle).
BasisElement dual(const BasisElement& e, const WeightSystem& ws, PolyType t);

bool is_gw_invariant(const BasisElement& e, const WeightSystem& ws, PolyType t);

/// Narrow elements plus beta_0 (chain) or beta_0 and beta_delta (loop);
/// Fermat has no invariant broad element.
std::vector<BasisElement> gw_invariant_elements(const WeightSystem& ws, PolyType t);

}  // namespace fjrw
