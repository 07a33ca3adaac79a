#include <fjrw/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

namespace fjrw {

const char* type_name(PolyType t) {
  switch (t) {
    case PolyType::fermat: return "fermat";
    case PolyType::chain: return "chain";
    case PolyType::loop: return "loop";
  }
  return "?";
}

namespace {

struct Term {
  long long e1 = 0, e2 = 0;     // exponents of x, y
  long long coefficient = 1;    // accepted only to reject values != 1 cleanly
};

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long uint_lit() {
    skip_ws();
    size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000'000) fail(errc::syntax_error, "exponent literal too large");
      ++pos;
    }
    if (pos == start) fail(errc::syntax_error, "expected an integer");
    return v;
  }

  // var := 'x' | 'y' | 'x1' | 'x2'; returns variable index 0 or 1
  int variable() {
    char c = peek();
    if (c == 'x') {
      ++pos;
      if (pos < s.size() && (s[pos] == '1' || s[pos] == '2')) {
        int idx = s[pos] == '1' ? 0 : 1;
        ++pos;
        return idx;
      }
      return 0;
    }
    if (c == 'y') {
      ++pos;
      return 1;
    }
    fail(errc::syntax_error, std::string("unexpected character '") + c + "' in polynomial");
  }

  Term term() {
    Term t;
    bool saw_factor = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        // Numeric factor: tolerated by the reader so that a coefficient != 1
        // reports not_invertible rather than a syntax error.
        long long v = uint_lit();
        if (consume('^')) {
          long long e = uint_lit();
          for (long long i = 0; i < e && t.coefficient <= 1'000'000; ++i) t.coefficient *= v;
        } else {
          t.coefficient *= v;
        }
        saw_factor = true;
      } else if (c == 'x' || c == 'y') {
        int var = variable();
        long long e = 1;
        if (consume('^')) e = uint_lit();
        (var == 0 ? t.e1 : t.e2) += e;
        saw_factor = true;
      } else {
        break;
      }
      consume('*');  // '*' between factors is optional
    }
    if (!saw_factor) fail(errc::syntax_error, "empty term");
    return t;
  }

  std::vector<Term> poly() {
    std::vector<Term> terms;
    terms.push_back(term());
    while (consume('+')) terms.push_back(term());
    if (!eof()) fail(errc::syntax_error, std::string("trailing input at '") + peek() + "'");
    return terms;
  }
};

InvertiblePolynomial classified(PolyType type, long long a1, long long a2, bool swapped) {
  InvertiblePolynomial p;
  p.type = type;
  p.a1 = a1;
  p.a2 = a2;
  p.swapped = swapped;
  switch (type) {
    case PolyType::fermat:
      if (a1 < 2 || a2 < 2) fail(errc::degenerate, "fermat exponents must be >= 2");
      p.exponent_matrix = {{{a1, 0}, {0, a2}}};
      break;
    case PolyType::chain:
      if (a1 < 2 || a2 < 2) fail(errc::degenerate, "chain exponents must be >= 2");
      p.exponent_matrix = {{{a1, 0}, {1, a2}}};
      break;
    case PolyType::loop:
      if (a1 < 2 || a2 < 2) fail(errc::degenerate, "loop exponents must be >= 2");
      p.exponent_matrix = {{{a1, 1}, {1, a2}}};
      break;
  }
  p.source = render(p);
  return p;
}

std::string power(const char* var, long long e) {
  std::string s = var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string render(const InvertiblePolynomial& p) {
  switch (p.type) {
    case PolyType::fermat:
      return power("x", p.a1) + "+" + power("y", p.a2);
    case PolyType::chain:
      return power("x", p.a1) + "+x*" + power("y", p.a2);
    case PolyType::loop:
      return power("x", p.a1) + "*y+x*" + power("y", p.a2);
  }
  return {};
}

InvertiblePolynomial parse_polynomial(std::string_view text) {
  Parser parser{text};
  std::vector<Term> terms = parser.poly();

  if (terms.size() != 2)
    fail(errc::not_invertible,
         "expected exactly two monomials, got " + std::to_string(terms.size()));
  for (const Term& t : terms) {
    if (t.coefficient != 1)
      fail(errc::not_invertible,
           "coefficient " + std::to_string(t.coefficient) + " != 1 is rejected, not rescaled");
    if (t.e1 == 0 && t.e2 == 0) fail(errc::not_invertible, "constant term");
  }

  // Match the two exponent vectors against the Table-1 shapes, in both
  // variable orders; the permutation applied is recorded.
  auto match = [&](const Term& s, const Term& t,
                   bool swapped) -> InvertiblePolynomial {
    // s, t with exponents read as (x1, x2) after the optional swap
    auto ex = [&](const Term& q) {
      return swapped ? std::pair{q.e2, q.e1} : std::pair{q.e1, q.e2};
    };
    auto [s1, s2] = ex(s);
    auto [t1, t2] = ex(t);
    if (s2 == 0 && t1 == 0) return classified(PolyType::fermat, s1, t2, swapped);
    if (s2 == 0 && t1 == 1 && t2 >= 1) return classified(PolyType::chain, s1, t2, swapped);
    if (s2 == 1 && t1 == 1 && s1 >= 1 && t2 >= 1)
      return classified(PolyType::loop, s1, t2, swapped);
    fail(errc::not_invertible, "not a Fermat, chain, or loop shape");
  };

  for (bool swapped : {false, true}) {
    for (int first : {0, 1}) {
      const Term& s = terms[static_cast<size_t>(first)];
      const Term& t = terms[static_cast<size_t>(1 - first)];
      try {
        return match(s, t, swapped);
      } catch (const Error& e) {
        if (e.code == errc::degenerate) throw;  // right shape, bad exponent
      }
    }
  }
  fail(errc::not_invertible, "not a Fermat, chain, or loop shape");
}

WeightSystem weight_system(const InvertiblePolynomial& p) {
  const auto& E = p.exponent_matrix;
  Int det = Int(E[0][0]) * E[1][1] - Int(E[0][1]) * E[1][0];
  if (det == 0) fail(errc::not_invertible, "exponent matrix is singular");

  // E * (q1,q2)^T = (1,1)^T
  Rational q1 = Rational(Int(E[1][1]) - Int(E[0][1]), det);
  Rational q2 = Rational(Int(E[0][0]) - Int(E[1][0]), det);
  if (!(q1 > 0 && q1 < 1 && q2 > 0 && q2 < 1))
    fail(errc::non_positive_weights, "weights are not in (0,1): not a positive weight system");

  Int dd = boost::multiprecision::lcm(denominator(q1), denominator(q2));
  WeightSystem ws;
  ws.d = static_cast<long long>(dd);
  ws.w1 = static_cast<long long>(Int(numerator(q1) * (dd / denominator(q1))));
  ws.w2 = static_cast<long long>(Int(numerator(q2) * (dd / denominator(q2))));
  ws.q1 = q1;
  ws.q2 = q2;
  ws.chat = Rational(2) - 2 * q1 - 2 * q2;
  if (std::gcd(ws.w1, ws.w2) != 1)
    fail(errc::non_positive_weights, "gcd(w1,w2) != 1; input is outside the normalized family");

  switch (p.type) {
    case PolyType::fermat: ws.delta = std::gcd(p.a1, p.a2); break;
    case PolyType::chain: ws.delta = std::gcd(p.a1 - 1, p.a2); break;
    case PolyType::loop: ws.delta = std::gcd(p.a1 - 1, p.a2 - 1); break;
  }

  // Normal-form reconstruction: a1 = delta*w2 (+1 for chain/loop),
  // a2 = delta*w1 (+1 for loop), d per the classification table.
  long long a1_expect = ws.delta * ws.w2 + (p.type == PolyType::fermat ? 0 : 1);
  long long a2_expect = ws.delta * ws.w1 + (p.type == PolyType::loop ? 1 : 0);
  long long d_expect = ws.delta * ws.w1 * ws.w2 +
                       (p.type == PolyType::fermat ? 0 : ws.w1) +
                       (p.type == PolyType::loop ? ws.w2 : 0);
  if (a1_expect != p.a1 || a2_expect != p.a2 || d_expect != ws.d)
    fail(errc::internal, "normal-form reconstruction failed for " + p.source);
  return ws;
}

InvertiblePolynomial from_weights(PolyType t, long long delta, long long w1, long long w2) {
  if (delta < 1 || w1 < 1 || w2 < 1) fail(errc::degenerate, "delta and weights must be positive");
  if (std::gcd(w1, w2) != 1) fail(errc::non_positive_weights, "gcd(w1,w2) != 1");
  long long a1 = delta * w2 + (t == PolyType::fermat ? 0 : 1);
  long long a2 = delta * w1 + (t == PolyType::loop ? 1 : 0);
  return classified(t, a1, a2, false);
}

MilnorCounts milnor_counts(const WeightSystem& ws, PolyType t) {
  MilnorCounts m;
  long long p = ws.delta * ws.w1 * ws.w2;
  switch (t) {
    case PolyType::fermat:
      m.nar = p - ws.w1 - ws.w2 + 1;
      m.bro = ws.delta - 1;
      break;
    case PolyType::chain:
      m.nar = p;
      m.bro = ws.delta;
      break;
    case PolyType::loop:
      m.nar = p + ws.w1 + ws.w2 - 1;
      m.bro = ws.delta + 1;
      break;
  }
  m.total = m.nar + m.bro;
  return m;
}

}  // namespace fjrw
