#pragma once

// Two-variable invertible quasihomogeneous polynomials: parsing, shape
// classification (Fermat / chain / loop), weight systems and state-space
// rank counts.

#include <fjrw/error.hpp>
#include <fjrw/rational.hpp>

#include <array>
#include <string>
#include <string_view>

namespace fjrw {

enum class PolyType { fermat, chain, loop };

const char* type_name(PolyType t);

/// A normalized two-variable invertible polynomial:
///   Fermat  x^a1 + y^a2          E = [[a1,0],[0,a2]]
///   chain   x^a1 + x*y^a2        E = [[a1,0],[1,a2]]
///   loop    x^a1*y + x*y^a2      E = [[a1,1],[1,a2]]
struct InvertiblePolynomial {
  PolyType type;
  long long a1 = 0, a2 = 0;
  std::array<std::array<long long, 2>, 2> exponent_matrix{};
  bool swapped = false;  // input variables were permuted to reach the normal shape
  std::string source;    // canonical rendering
};

/// Grammar: poly := term '+' term ; term := factor ('*'? factor)* ;
/// factor := var ('^' uint)? ; var := x | y | x1 | x2. Whitespace ignored.
/// Errors: syntax_error (malformed), not_invertible (wrong shape, extra
/// terms, coefficient != 1), degenerate (exponent below the shape minimum).
InvertiblePolynomial parse_polynomial(std::string_view text);

std::string render(const InvertiblePolynomial& p);

struct WeightSystem {
  long long d = 0, w1 = 0, w2 = 0, delta = 0;
  Rational q1, q2;  // w_i / d
  Rational chat;    // 2 - 2*q1 - 2*q2

  bool has_weight_half() const { return 2 * w1 == d || 2 * w2 == d; }
  Rational theta(long long m, int j) const {  // {m*w_j/d}, the [0,1) representative
    return Rational(mod_floor(m * (j == 1 ? w1 : w2), d), d);
  }
};

/// Solve E_W * (q1,q2)^T = (1,1)^T exactly, derive (d; w1, w2) and delta,
/// and check the normal-form reconstruction a_i = delta*w_j (+1 where the
/// shape demands it).
WeightSystem weight_system(const InvertiblePolynomial& p);

/// Rebuild a polynomial from classification data (used by sweeps). Validates
/// the same shape bounds as the parser.
InvertiblePolynomial from_weights(PolyType t, long long delta, long long w1, long long w2);

struct MilnorCounts {
  long long total = 0, nar = 0, bro = 0;
};

MilnorCounts milnor_counts(const WeightSystem& ws, PolyType t);

}  // namespace fjrw
