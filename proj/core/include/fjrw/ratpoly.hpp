#pragma once

// Dense univariate polynomials with exact rational coefficients. Small and
// purpose-built: Euler multiplication matrices are polynomials in the
// deformation coordinate t, and a few identities are asserted symbolically.

#include <fjrw/rational.hpp>

#include <string>
#include <vector>

namespace fjrw {

class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(Rational constant) : c_{std::move(constant)} { trim(); }
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * x^k
  static RatPoly monomial(Rational coeff, int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(coeff);
    return RatPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const {
    static const Rational zero{};
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : zero;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(a*x + b)
  RatPoly compose_affine(const Rational& a, const Rational& b) const {
    RatPoly result;
    RatPoly lin(std::vector<Rational>{b, a});
    RatPoly pw(Rational(1));
    for (const auto& ck : c_) {
      result += pw * RatPoly(ck);
      pw = pw * lin;
    }
    return result;
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(v));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& p) { return RatPoly(s) * p; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& ck = coeff(k);
      if (ck == 0) continue;
      Rational mag = ck < 0 ? Rational(-ck) : ck;
      if (out.empty()) {
        if (ck < 0) out += "-";
      } else {
        out += ck < 0 ? " - " : " + ";
      }
      const bool unit = (mag == 1) && k > 0;
      if (!unit) out += rat_str(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[k] multiplies x^k; invariant: no trailing zeros
};

}  // namespace fjrw
