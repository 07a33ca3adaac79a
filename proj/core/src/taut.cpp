#include <fjrw/taut.hpp>

#include <algorithm>
#include <bit>

namespace fjrw {

namespace {

uint8_t full_mask(Model m) { return static_cast<uint8_t>((1u << markings(m)) - 1); }

}  // namespace

BoundaryIndex::BoundaryIndex(Model model, uint8_t mask) : model_(model), mask_(mask) {
  if ((mask_ & ~full_mask(model_)) != 0) fail(errc::internal, "boundary mask out of range");
  if (!(mask_ & 1u)) mask_ = static_cast<uint8_t>(full_mask(model_) & ~mask_);
  int sz = std::popcount(mask_);
  int n = markings(model_);
  if (sz < 2 || sz > n - 2)
    fail(errc::internal, "boundary subset must leave two markings on each side");
}

BoundaryIndex::BoundaryIndex(Model model, std::initializer_list<int> marks)
    : BoundaryIndex(model, [&] {
        uint8_t m = 0;
        for (int i : marks) {
          if (i < 1 || i > markings(model)) fail(errc::internal, "marking out of range");
          m |= static_cast<uint8_t>(1u << (i - 1));
        }
        return m;
      }()) {}

int BoundaryIndex::size() const { return std::popcount(mask_); }

uint8_t BoundaryIndex::complement_mask() const {
  return static_cast<uint8_t>(full_mask(model_) & ~mask_);
}

std::vector<int> BoundaryIndex::marks() const {
  std::vector<int> out;
  for (int i = 1; i <= markings(model_); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string BoundaryIndex::str() const {
  std::string s = "{";
  for (int i : marks()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

bool operator<(const BoundaryIndex& a, const BoundaryIndex& b) {
  if (a.model_ != b.model_) return a.model_ < b.model_;
  auto key = [](const BoundaryIndex& k) { return std::pair(k.size(), k.mask()); };
  return key(a) < key(b);
}

const std::vector<BoundaryIndex>& all_boundaries(Model model) {
  static const std::vector<BoundaryIndex> four = [] {
    std::vector<BoundaryIndex> v;
    for (int a = 2; a <= 4; ++a) v.push_back(BoundaryIndex(Model::m04, {1, a}));
    return v;
  }();
  static const std::vector<BoundaryIndex> five = [] {
    std::vector<BoundaryIndex> v;
    for (int a = 2; a <= 5; ++a) v.push_back(BoundaryIndex(Model::m05, {1, a}));
    for (int a = 2; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) v.push_back(BoundaryIndex(Model::m05, {1, a, b}));
    return v;
  }();
  return model == Model::m04 ? four : five;
}

namespace {

constexpr int16_t kKappa1 = 0;

int16_t psi_id(Model m, int i) {
  if (i < 1 || i > markings(m)) fail(errc::internal, "psi marking out of range");
  return static_cast<int16_t>(i);
}

int16_t boundary_id(const BoundaryIndex& K) {
  const auto& all = all_boundaries(K.model());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == K) return static_cast<int16_t>(markings(K.model()) + 1 + i);
  fail(errc::internal, "unknown boundary index");
}

int gen_weight(int16_t id) { return id == TautClass::kKappa2 ? 2 : 1; }

int mono_degree(const TautClass::Mono& m) {
  int d = 0;
  if (m.a != TautClass::kNone) d += gen_weight(m.a);
  if (m.b != TautClass::kNone) d += gen_weight(m.b);
  return d;
}

std::string gen_str(Model model, int16_t id) {
  if (id == kKappa1) return "k1";
  if (id == TautClass::kKappa2) return "k2";
  int n = markings(model);
  if (id >= 1 && id <= n) return "psi_" + std::to_string(id);
  return "D" + all_boundaries(model)[static_cast<size_t>(id - n - 1)].str();
}

}  // namespace

TautClass TautClass::kappa1(Model model) {
  TautClass c(model);
  c.add_term(Mono{kKappa1, kNone}, 1);
  return c;
}

TautClass TautClass::kappa2(Model model) {
  if (model != Model::m05) fail(errc::degree_mismatch, "kappa2 exceeds the dimension of M0,4");
  TautClass c(model);
  c.add_term(Mono{kKappa2, kNone}, 1);
  return c;
}

TautClass TautClass::psi(Model model, int i) {
  TautClass c(model);
  c.add_term(Mono{psi_id(model, i), kNone}, 1);
  return c;
}

TautClass TautClass::boundary(const BoundaryIndex& K) {
  TautClass c(K.model());
  c.add_term(Mono{boundary_id(K), kNone}, 1);
  return c;
}

void TautClass::add_term(Mono m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TautClass::degree() const {
  if (terms_.empty()) return 0;
  int d = mono_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) != d) fail(errc::degree_mismatch, "mixed-degree tautological class");
  return d;
}

TautClass& TautClass::operator+=(const TautClass& o) {
  if (model_ != o.model_) fail(errc::internal, "mixing moduli models");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  if (model_ != o.model_) fail(errc::internal, "mixing moduli models");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

TautClass multiply(const TautClass& a, const TautClass& b) {
  if (a.model() != b.model()) fail(errc::internal, "mixing moduli models");
  TautClass out(a.model());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (mono_degree(ma) + mono_degree(mb) > 2)
        fail(errc::degree_overflow, "tautological product exceeds degree 2");
      // collect the at most two generator slots
      int16_t gens[2];
      int ng = 0;
      for (int16_t g : {ma.a, ma.b, mb.a, mb.b})
        if (g != TautClass::kNone) gens[ng++] = g;
      TautClass::Mono m;
      if (ng == 1) m = {gens[0], TautClass::kNone};
      if (ng == 2) m = {std::min(gens[0], gens[1]), std::max(gens[0], gens[1])};
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string TautClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string gens;
    if (m.a != kNone) gens = gen_str(model_, m.a);
    if (m.b != kNone) {
      if (m.a == m.b) {
        gens = gen_str(model_, m.a) + "^2";
      } else {
        gens += "*" + gen_str(model_, m.b);
      }
    }
    if (gens.empty()) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += gens;
    }
  }
  return out;
}

namespace {

// Pairwise integrals on the 5-marked model, per the degree-2 intersection
// table. psi_i * D_K is 1 exactly when i sits on the 4-pointed component:
// the complement side for |K| = 2, the K side for |K| = 3.
Rational pair_integral_m05(int16_t x, int16_t y) {
  constexpr int n = 5;
  auto is_psi = [&](int16_t g) { return g >= 1 && g <= n; };
  auto is_bdy = [&](int16_t g) { return g > n; };
  auto bdy = [&](int16_t g) { return all_boundaries(Model::m05)[static_cast<size_t>(g - n - 1)]; };

  if (x > y) std::swap(x, y);
  if (x == kKappa1 && y == kKappa1) return 5;
  if (x == kKappa1 && is_psi(y)) return 3;
  if (x == kKappa1 && is_bdy(y)) return 1;
  if (is_psi(x) && is_psi(y)) return x == y ? 1 : 2;
  if (is_psi(x) && is_bdy(y)) {
    BoundaryIndex K = bdy(y);
    bool larger = K.size() == 2 ? !K.contains(x) : K.contains(x);
    return larger ? 1 : 0;
  }
  if (is_bdy(x) && is_bdy(y)) {
    BoundaryIndex K = bdy(x), L = bdy(y);
    if (K == L) return -1;
    uint8_t km = K.mask(), lm = L.mask();
    if (K.size() != L.size()) {
      uint8_t small = K.size() < L.size() ? km : lm;
      uint8_t big = K.size() < L.size() ? lm : km;
      return (small & ~big) == 0 ? 1 : 0;  // pair {1,a} inside a triple {1,a,b}
    }
    if (K.size() == 3 && (km & lm) == 1u) return 1;  // complementary triples through 1
    return 0;
  }
  fail(errc::internal, "unhandled generator pair");
}

}  // namespace

Rational integrate_m05(const TautClass& c) {
  if (c.model() != Model::m05) fail(errc::degree_mismatch, "class lives on the wrong model");
  Rational total = 0;
  for (const auto& [m, coeff] : c.terms()) {
    if (mono_degree(m) != 2) fail(errc::degree_mismatch, "integrand must have degree 2");
    Rational val = (m.a == TautClass::kKappa2) ? Rational(1) : pair_integral_m05(m.a, m.b);
    total += coeff * val;
  }
  return total;
}

Rational integrate_m04(const TautClass& c) {
  if (c.model() != Model::m04) fail(errc::degree_mismatch, "class lives on the wrong model");
  Rational total = 0;
  for (const auto& [m, coeff] : c.terms()) {
    if (mono_degree(m) != 1) fail(errc::degree_mismatch, "integrand must have degree 1");
    total += coeff;  // every degree-1 generator integrates to 1 on M0,4
  }
  return total;
}

TautClass pushforward_unit(const BoundaryIndex& K) { return TautClass::boundary(K); }

TautClass pushforward_psi_diff(const BoundaryIndex& K) {
  if (K.model() != Model::m05) fail(errc::degree_mismatch, "psi pushforward needs the 5-marked model");
  TautClass dK = TautClass::boundary(K);
  if (K.size() == 2) {
    // psi_+ pushes to zero; psi_- pushes to D_K * D_{K+e}. Any choice of e
    // outside K yields the same class in cohomology; fix the largest.
    int e = 0;
    for (int i = 5; i >= 2; --i)
      if (!K.contains(i)) {
        e = i;
        break;
      }
    uint8_t partner = static_cast<uint8_t>(K.mask() | (1u << (e - 1)));
    return multiply(dK, TautClass::boundary(BoundaryIndex(Model::m05, partner)));
  }
  // |K| = 3: psi_- pushes to zero; psi_+ is a boundary point of the
  // four-pointed K-side, so it pushes to the two-divisor stratum
  // D_K * D_{1 u K^c}. The self-intersection identity
  // D_K^2 = -(rho_K)_*(psi_+ + psi_-) pins the integral to -1.
  uint8_t partner = static_cast<uint8_t>(K.complement_mask() | 1u);
  return Rational(-1) *
         multiply(dK, TautClass::boundary(BoundaryIndex(Model::m05, partner)));
}

}  // namespace fjrw
