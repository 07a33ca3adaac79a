#pragma once

// Test-only brute-force model of the Milnor algebra of one polynomial: the
// quotient by the partial-derivative ideal, computed by exact linear algebra
// in a fixed weighted degree. Used to certify the broad dual-index maps:
// a claimed dual pair must multiply to a nonzero multiple of the socle.

#include <fjrw/polynomial.hpp>

#include <map>
#include <utility>
#include <vector>

namespace fjrw::testing {

// A polynomial in x, y as {exponent pair -> coefficient}.
using Poly2 = std::map<std::pair<long long, long long>, Rational>;

inline Poly2 mono(long long p, long long q, Rational c = 1) { return {{{p, q}, c}}; }

inline Poly2 mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      auto key = std::pair{ma.first + mb.first, ma.second + mb.second};
      out[key] += ca * cb;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

struct JacobianModel {
  InvertiblePolynomial poly;
  WeightSystem ws;
  Poly2 wx, wy;                          // partial derivatives
  std::pair<long long, long long> socle; // exponents of the Hessian leading monomial

  explicit JacobianModel(const InvertiblePolynomial& p) : poly(p), ws(weight_system(p)) {
    auto add = [](Poly2& f, long long c, long long ex, long long ey) {
      if (c != 0) f[{ex, ey}] += c;
    };
    long long a1 = p.a1, a2 = p.a2;
    switch (p.type) {
      case PolyType::fermat:
        add(wx, a1, a1 - 1, 0);
        add(wy, a2, 0, a2 - 1);
        socle = {a1 - 2, a2 - 2};
        break;
      case PolyType::chain:  // x^a1 + x y^a2
        add(wx, a1, a1 - 1, 0);
        add(wx, 1, 0, a2);
        add(wy, a2, 1, a2 - 1);
        socle = {a1 - 1, a2 - 2};
        break;
      case PolyType::loop:  // x^a1 y + x y^a2
        add(wx, a1, a1 - 1, 1);
        add(wx, 1, 0, a2);
        add(wy, 1, a1, 0);
        add(wy, a2, 1, a2 - 1);
        socle = {a1 - 1, a2 - 1};
        break;
    }
  }

  // Weighted degree scaled by d so it is an integer: w1*p + w2*q.
  long long wdeg(long long p, long long q) const { return ws.w1 * p + ws.w2 * q; }

  /// Residue pairing up to one global constant: the coefficient of the socle
  /// monomial in f*g after reduction modulo the Jacobian ideal, computed by
  /// row-reducing the ideal's piece in the socle degree.
  Rational socle_coefficient(const Poly2& fg) const {
    const long long target = wdeg(socle.first, socle.second);
    for (const auto& [m, c] : fg)
      if (wdeg(m.first, m.second) != target) fail(errc::internal, "socle_coefficient: degree");

    // Monomials of the target weighted degree.
    std::vector<std::pair<long long, long long>> basis_monos;
    std::map<std::pair<long long, long long>, size_t> col;
    for (long long p = 0; ws.w1 * p <= target; ++p) {
      long long rem = target - ws.w1 * p;
      if (rem % ws.w2 != 0) continue;
      long long q = rem / ws.w2;
      col[{p, q}] = basis_monos.size();
      basis_monos.push_back({p, q});
    }

    // Ideal generators in that degree: m * Wx and m * Wy over all monomials m.
    std::vector<std::vector<Rational>> rows;
    for (const Poly2* gen : {&wx, &wy}) {
      long long gdeg = 0;
      for (const auto& [m, c] : *gen) gdeg = wdeg(m.first, m.second);  // quasihomogeneous
      long long need = target - gdeg;
      if (need < 0) continue;
      for (long long p = 0; ws.w1 * p <= need; ++p) {
        long long rem = need - ws.w1 * p;
        if (rem % ws.w2 != 0) continue;
        long long q = rem / ws.w2;
        Poly2 prod = mul(mono(p, q), *gen);
        std::vector<Rational> row(basis_monos.size());
        for (const auto& [m, c] : prod) row[col.at(m)] = c;
        rows.push_back(std::move(row));
      }
    }

    // Vector to reduce.
    std::vector<Rational> v(basis_monos.size());
    for (const auto& [m, c] : fg) v[col.at(m)] = c;

    // Gaussian elimination of the ideal rows; reduce v against the pivots.
    size_t rank = 0;
    for (size_t c = 0; c < basis_monos.size() && rank < rows.size(); ++c) {
      size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][c] == 0) continue;
        Rational f = rows[r][c] / rows[rank][c];
        for (size_t cc = c; cc < basis_monos.size(); ++cc) rows[r][cc] -= f * rows[rank][cc];
      }
      if (v[c] != 0) {
        Rational f = v[c] / rows[rank][c];
        for (size_t cc = c; cc < basis_monos.size(); ++cc) v[cc] -= f * rows[rank][cc];
      }
      ++rank;
    }
    // The quotient in this degree is one-dimensional (spanned by the socle);
    // after reduction v must be supported on a single residual monomial.
    Rational result = 0;
    for (size_t c = 0; c < basis_monos.size(); ++c)
      if (v[c] != 0) {
        if (result != 0) fail(errc::internal, "socle piece is not one-dimensional");
        result = v[c];
      }
    return result;
  }
};

}  // namespace fjrw::testing
