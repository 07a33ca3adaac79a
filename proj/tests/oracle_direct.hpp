#pragma once

// Test-only evaluation of concave 5-point correlators by direct expansion:
// scalar Bernoulli values against hand-coded intersection numbers, with no
// tautological-class bookkeeping. Independent of the TautClass layer except
// for the shared numeric table, so it cross-checks products, canonical
// ordering, and the boundary pushforward rules.

#include <fjrw/correlator.hpp>

#include <vector>

namespace fjrw::testing {

struct DirectData {
  Rational q;                  // theta of J for the chosen axis
  std::vector<Rational> ins;   // theta of the five insertions
  std::vector<Rational> node;  // theta of gamma_+ per boundary (all_boundaries order)
};

inline DirectData direct_data(const CorrelatorSpec& spec, int bundle) {
  DirectData d;
  d.q = bundle == 1 ? spec.ws.q1 : spec.ws.q2;
  for (const BasisElement& e : spec.insertions)
    d.ins.push_back(bundle == 1 ? e.sector.theta1 : e.sector.theta2);
  for (const BoundaryDecoration& bd : boundary_decorations(spec))
    d.node.push_back(bundle == 1 ? bd.gamma_plus.theta1 : bd.gamma_plus.theta2);
  return d;
}

inline Rational psi_delta(int i, const BoundaryIndex& K) {
  bool larger = K.size() == 2 ? !K.contains(i) : K.contains(i);
  return larger ? 1 : 0;
}

inline Rational delta_delta(const BoundaryIndex& K, const BoundaryIndex& L) {
  if (K == L) return -1;
  if (K.size() != L.size()) {
    uint8_t small = K.size() < L.size() ? K.mask() : L.mask();
    uint8_t big = K.size() < L.size() ? L.mask() : K.mask();
    return (small & ~big) == 0 ? 1 : 0;
  }
  if (K.size() == 3 && (K.mask() & L.mask()) == 1u) return 1;
  return 0;
}

/// integral of ch1(L_a) * ch1(L_b) expanded termwise.
inline Rational direct_ch1_ch1(const CorrelatorSpec& spec, int a, int b) {
  DirectData A = direct_data(spec, a), B = direct_data(spec, b);
  const auto& bs = all_boundaries(Model::m05);
  auto B2 = [](const Rational& x) { return bernoulli_B(2, x); };
  Rational p = B2(A.q), pp = B2(B.q);
  Rational total = 5 * p * pp;                                   // kappa1 * kappa1
  for (int i = 0; i < 5; ++i)                                    // kappa1 * psi cross terms
    total -= 3 * (p * B2(B.ins[i]) + pp * B2(A.ins[i]));
  for (size_t K = 0; K < bs.size(); ++K)                         // kappa1 * boundary
    total += p * B2(B.node[K]) + pp * B2(A.node[K]);
  for (int i = 0; i < 5; ++i)                                    // psi * psi
    for (int j = 0; j < 5; ++j)
      total += B2(A.ins[i]) * B2(B.ins[j]) * (i == j ? 1 : 2);
  for (int i = 0; i < 5; ++i)                                    // psi * boundary
    for (size_t K = 0; K < bs.size(); ++K)
      total -= psi_delta(i + 1, bs[K]) *
               (B2(A.ins[i]) * B2(B.node[K]) + B2(B.ins[i]) * B2(A.node[K]));
  for (size_t K = 0; K < bs.size(); ++K)                         // boundary * boundary
    for (size_t L = 0; L < bs.size(); ++L)
      total += delta_delta(bs[K], bs[L]) * B2(A.node[K]) * B2(B.node[L]);
  return total / 4;
}

/// integral of (1/2) ch1(L_j)^2 + ch2(L_j) expanded termwise; the ch2
/// boundary term integrates to +1 on two-marking cuts and -1 on
/// three-marking cuts (self-intersection identity for boundary divisors).
inline Rational direct_case_b(const CorrelatorSpec& spec, int j) {
  Rational total = direct_ch1_ch1(spec, j, j) / 2;
  DirectData D = direct_data(spec, j);
  auto B3 = [](const Rational& x) { return bernoulli_B(3, x); };
  Rational ch2 = B3(D.q);  // kappa2 integrates to 1
  for (int i = 0; i < 5; ++i) ch2 -= B3(D.ins[i]);  // psi_i^2 integrates to 1
  const auto& bs = all_boundaries(Model::m05);
  for (size_t K = 0; K < bs.size(); ++K)
    ch2 += (bs[K].size() == 2 ? 1 : -1) * B3(D.node[K]);
  return total + ch2 / 6;
}

/// Full 5-point direct evaluation (assumes the spec is concave with the
/// stated rank profile).
inline Rational direct_five_point(const CorrelatorSpec& spec) {
  RankProfile p = rank_profile(spec);
  if (p.kase == ConcavityCase::case_a) return direct_ch1_ch1(spec, 1, 2);
  return direct_case_b(spec, p.rank1 == 2 ? 1 : 2);
}

}  // namespace fjrw::testing
