#pragma once

// Genus-0 concave correlators with 3 to 5 insertions. The pipeline:
// selection-rule line-bundle degrees -> boundary node decorations ->
// concavity / rank profile -> Chern characters of R-pushforwards via
// Bernoulli coefficients -> tautological integration.

#include <fjrw/ratpoly.hpp>
#include <fjrw/state_space.hpp>
#include <fjrw/taut.hpp>

#include <string>
#include <vector>

namespace fjrw {

/// B2(x) = x^2 - x + 1/6, B3(x) = x^3 - (3/2)x^2 + (1/2)x; other orders are
/// not needed and rejected.
Rational bernoulli_B(int k, const Rational& x);

/// The same Bernoulli polynomial with a formal variable, for symbolic
/// identity checks.
RatPoly bernoulli_poly(int k);

struct CorrelatorSpec {
  WeightSystem ws;
  PolyType type = PolyType::fermat;
  std::vector<BasisElement> insertions;  // ordered, length >= 3

  int k() const { return static_cast<int>(insertions.size()); }
  bool all_narrow() const;
};

/// Convenience: a spec whose insertions are alpha_{m} for the given indices.
CorrelatorSpec narrow_spec(const WeightSystem& ws, PolyType t, const std::vector<long long>& ms);

struct LineBundleDegrees {
  Rational deg1, deg2;       // deg L_j = (k-2) q_j - sum_i theta_j(gamma_i)
  bool integral1, integral2;
  bool integral() const { return integral1 && integral2; }
  Rational deg(int j) const { return j == 1 ? deg1 : deg2; }
};

LineBundleDegrees line_bundle_degrees(const CorrelatorSpec& spec);

/// The three necessary conditions for a nonzero correlator. gw_invariance is
/// the exact character test: the product of the broad insertions' maximal
/// symmetry characters must be trivial (narrow insertions act trivially).
struct NonvanishingCheck {
  bool selection = false;
  bool degree = false;
  bool gw_invariance = false;
  bool all() const { return selection && degree && gw_invariance; }
};

NonvanishingCheck nonvanishing_check(const CorrelatorSpec& spec);

struct BoundaryDecoration {
  BoundaryIndex K;
  GroupElement gamma_plus;  // J^{(|K|-1) - sum_{i in K} m_i mod d}
};

/// Node decorations for every boundary index of the 4- or 5-marked model,
/// relative to the spec's insertion order.
std::vector<BoundaryDecoration> boundary_decorations(const CorrelatorSpec& spec);

enum class ConcavityCase { case_a, case_b, not_concave };

struct RankProfile {
  long long rank1 = 0, rank2 = 0;  // rank R^1 pi_* L_j = -deg L_j - 1
  ConcavityCase kase = ConcavityCase::not_concave;
  std::string failure;                     // filled when not concave
  std::vector<BoundaryIndex> broad_nodes;  // decorations with some vanishing phase (diagnostic)

  long long total_rank() const { return rank1 + rank2; }
};

/// Concavity demands deg L_j <= -1 globally and on both sides of every
/// boundary cut; insertions must all be narrow and degrees integral.
RankProfile rank_profile(const CorrelatorSpec& spec);

/// ch_order of R-pushforward of L_j (j = 1 or 2) as a tautological class:
///   ch1 = (1/2)(B2(q_j) k1 - sum B2(theta_j(g_i)) psi_i + sum_K B2(theta_j(g+^K)) D_K)
///   ch2 = (1/6)(B3(q_j) k2 - sum B3 psi_i^2 + sum_K B3 * (rho_K)_*(psi_- - psi_+))
/// ch2 only exists on the 5-marked model.
TautClass chern_character(const CorrelatorSpec& spec, int bundle, int order);

/// Exact value of a concave 3/4/5-point correlator: 1 for three points,
/// the ch1 integral of the rank-1 bundle for four, and the top Chern class
/// of the rank-2 obstruction for five (ch1*ch1 in case A, ch1^2/2 + ch2 in
/// case B). Returns 0 when the selection rule or the degree count rules the
/// value out; throws not_concave when a bundle acquires sections.
Rational evaluate_concave(const CorrelatorSpec& spec);

}  // namespace fjrw
