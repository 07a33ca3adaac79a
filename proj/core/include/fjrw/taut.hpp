#pragma once

// Degree <= 2 tautological classes on the moduli of stable genus-0 curves
// with 4 or 5 markings: formal combinations of kappa_1, kappa_2, psi_i and
// boundary divisors D_K, with exact intersection numbers and the boundary
// pushforward rules needed by second Chern characters.

#include <fjrw/error.hpp>
#include <fjrw/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace fjrw {

enum class Model : int { m04 = 4, m05 = 5 };

inline int markings(Model m) { return static_cast<int>(m); }

/// A boundary divisor of the n-marked model, indexed by the subset of
/// markings containing marking 1 (size 2 on both sides for n = 4; size 2 or
/// 3 on the 1-side for n = 5). Construction canonicalizes to the 1-side.
class BoundaryIndex {
 public:
  BoundaryIndex(Model model, std::initializer_list<int> marks);
  BoundaryIndex(Model model, uint8_t mask);

  Model model() const { return model_; }
  uint8_t mask() const { return mask_; }
  int size() const;
  bool contains(int marking) const { return mask_ & (1u << (marking - 1)); }
  /// Complementary subset (does not contain marking 1).
  uint8_t complement_mask() const;
  std::vector<int> marks() const;
  std::string str() const;  // e.g. "{1,2,5}"

  friend bool operator==(const BoundaryIndex& a, const BoundaryIndex& b) {
    return a.model_ == b.model_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const BoundaryIndex& a, const BoundaryIndex& b);

 private:
  Model model_;
  uint8_t mask_;  // bit i-1 set <=> marking i in K; always contains marking 1
};

/// All boundary indices in a fixed order: size-2 subsets by their non-1
/// marking, then size-3 subsets lexicographically (n = 5 only).
const std::vector<BoundaryIndex>& all_boundaries(Model model);

class TautClass {
 public:
  explicit TautClass(Model model) : model_(model) {}

  static TautClass zero(Model model) { return TautClass(model); }
  static TautClass kappa1(Model model);
  static TautClass kappa2(Model model);  // n = 5 only
  static TautClass psi(Model model, int i);
  static TautClass boundary(const BoundaryIndex& K);

  Model model() const { return model_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common degree of all monomials; throws degree_mismatch when mixed.
  int degree() const;

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  TautClass& operator*=(const Rational& s);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
  friend TautClass operator*(const Rational& s, TautClass c) { return c *= s; }
  friend bool operator==(const TautClass& a, const TautClass& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

  /// Formal bilinear product; throws degree_overflow past degree 2.
  friend TautClass multiply(const TautClass& a, const TautClass& b);

  std::string str() const;  // debug dump, e.g. "5/36*k1^2 - 1/6*psi_3*D{1,2}"

  // Generator ids: 0 = kappa1, 1..n = psi_i, n+1.. = boundaries in
  // all_boundaries order; kKappa2 stands alone with weight 2.
  static constexpr int16_t kKappa2 = 64;
  static constexpr int16_t kNone = -1;
  struct Mono {
    int16_t a = kNone, b = kNone;  // sorted: a <= b unless empty
    auto operator<=>(const Mono&) const = default;
  };
  const std::map<Mono, Rational>& terms() const { return terms_; }

 private:
  void add_term(Mono m, const Rational& c);
  Model model_;
  std::map<Mono, Rational> terms_;  // nonzero coefficients only
};

/// Intersection numbers of degree-2 monomials on the 5-marked model:
/// kappa2 = 1, kappa1^2 = 5, kappa1*psi = 3, kappa1*D = 1,
/// psi_i*psi_j = 2 - delta_ij, psi_i*D_K = [i on the 4-pointed side],
/// D_K*D_K' = -1 / +1 / 0 by the adjacency of the two cuts.
Rational integrate_m05(const TautClass& c);

/// Degree-1 integrals on the 4-marked model: every generator integrates to 1.
Rational integrate_m04(const TautClass& c);

/// (rho_K)_*(1) = D_K.
TautClass pushforward_unit(const BoundaryIndex& K);

/// (rho_K)_*(psi_- - psi_+) on the 5-marked model:
/// |K| = 2: D_K * D_{K + e} with e the largest marking outside K (integral +1);
/// |K| = 3: -D_K * D_{K'} with K' the complementary triple through 1
/// (integral -1). Swapping the cut sides negates both the class and the
/// third Bernoulli coefficient it multiplies, which keeps second Chern
/// characters independent of the side convention.
TautClass pushforward_psi_diff(const BoundaryIndex& K);

}  // namespace fjrw
