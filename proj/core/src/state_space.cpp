#include <fjrw/state_space.hpp>

namespace fjrw {

GroupElement group_element(const WeightSystem& ws, long long m) {
  GroupElement g;
  g.m = mod_floor(m, ws.d);
  g.theta1 = ws.theta(g.m, 1);
  g.theta2 = ws.theta(g.m, 2);
  return g;
}

bool operator==(const BasisElement& a, const BasisElement& b) {
  return a.kind == b.kind && a.index == b.index;
}

std::vector<long long> narrow_indices(const WeightSystem& ws) {
  std::vector<long long> nar;
  for (long long k = 1; k < ws.d; ++k)
    if ((k * ws.w1) % ws.d != 0 && (k * ws.w2) % ws.d != 0) nar.push_back(k);
  return nar;
}

BasisElement narrow_element(const WeightSystem& ws, long long m) {
  GroupElement g = group_element(ws, m);
  if (!g.is_narrow() || g.m == 0)
    fail(errc::index_not_narrow, "alpha_" + std::to_string(m) + " is not a narrow index");
  BasisElement e;
  e.kind = BasisElement::Kind::narrow;
  e.index = g.m;
  e.sector = g;
  e.degree = g.theta1 + g.theta2 - ws.q1 - ws.q2;
  return e;
}

namespace {

// beta_k range per type: Fermat 1..delta-1, chain 0..delta-1, loop 0..delta
std::pair<long long, long long> broad_range(const WeightSystem& ws, PolyType t) {
  switch (t) {
    case PolyType::fermat: return {1, ws.delta - 1};
    case PolyType::chain: return {0, ws.delta - 1};
    case PolyType::loop: return {0, ws.delta};
  }
  return {1, 0};
}

std::pair<long long, long long> broad_monomial(const WeightSystem& ws, PolyType t, long long k) {
  switch (t) {
    case PolyType::fermat: return {k * ws.w2 - 1, (ws.delta - k) * ws.w1 - 1};
    case PolyType::chain: return {k * ws.w2, (ws.delta - k) * ws.w1 - 1};
    case PolyType::loop: return {k * ws.w2, (ws.delta - k) * ws.w1};
  }
  return {};
}

}  // namespace

BasisElement broad_element(const WeightSystem& ws, PolyType t, long long k) {
  auto [lo, hi] = broad_range(ws, t);
  if (k < lo || k > hi)
    fail(errc::index_out_of_range, "beta_" + std::to_string(k) + " outside the broad range");
  BasisElement e;
  e.kind = BasisElement::Kind::broad;
  e.index = k;
  e.sector = group_element(ws, 0);
  e.degree = ws.chat / 2;  // N_g = 2 at the identity sector
  e.monomial = broad_monomial(ws, t, k);
  return e;
}

std::vector<BasisElement> basis(const WeightSystem& ws, PolyType t) {
  std::vector<BasisElement> out;
  for (long long m : narrow_indices(ws)) out.push_back(narrow_element(ws, m));
  auto [lo, hi] = broad_range(ws, t);
  for (long long k = lo; k <= hi; ++k) out.push_back(broad_element(ws, t, k));
  return out;
}

Rational degree(const BasisElement& e, const WeightSystem& ws) {
  if (e.is_narrow()) return e.sector.theta1 + e.sector.theta2 - ws.q1 - ws.q2;
  return ws.chat / 2;
}

BasisElement dual(const BasisElement& e, const WeightSystem& ws, PolyType t) {
  if (e.is_narrow()) return narrow_element(ws, ws.d - e.index);
  long long k = e.index;
  long long partner;
  if (t == PolyType::chain)
    partner = (k == 0) ? 0 : ws.delta - k;
  else
    partner = ws.delta - k;
  auto [lo, hi] = broad_range(ws, t);
  if (partner < lo || partner > hi)
    fail(errc::dual_out_of_range, "broad dual index " + std::to_string(partner) + " out of range");
  return broad_element(ws, t, partner);
}

bool is_gw_invariant(const BasisElement& e, const WeightSystem& ws, PolyType t) {
  if (e.is_narrow()) return true;
  switch (t) {
    case PolyType::fermat: return false;
    case PolyType::chain: return e.index == 0;
    case PolyType::loop: return e.index == 0 || e.index == ws.delta;
  }
  return false;
}

std::vector<BasisElement> gw_invariant_elements(const WeightSystem& ws, PolyType t) {
  std::vector<BasisElement> out;
  for (const BasisElement& e : basis(ws, t))
    if (is_gw_invariant(e, ws, t)) out.push_back(e);
  return out;
}

}  // namespace fjrw
