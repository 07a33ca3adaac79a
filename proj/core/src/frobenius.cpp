#include <fjrw/frobenius.hpp>

#include <algorithm>

namespace fjrw {

long long lambda_invariant(const WeightSystem& ws) {
  return ws.delta * ws.w1 * ws.w2 - ws.w1 - ws.w2 - ws.delta;
}

Rational c5_closed_form(const WeightSystem& ws) {
  return Rational(Int(ws.w1) * ws.w2, Int(ws.d) * ws.d);
}

namespace {

void require_fermat_main_range(const WeightSystem& ws, PolyType t, const char* who) {
  if (t != PolyType::fermat) fail(errc::unsupported, std::string(who) + ": Fermat systems only");
  if (ws.chat < 1) fail(errc::unsupported, std::string(who) + ": needs central charge >= 1");
  if (ws.d < 4) fail(errc::unsupported, std::string(who) + ": needs d >= 4");
  if (ws.has_weight_half()) fail(errc::weight_half, std::string(who) + ": weight-1/2 variable");
}

}  // namespace

Rational c5(const WeightSystem& ws, PolyType t) {
  require_fermat_main_range(ws, t, "c5");
  CorrelatorSpec spec = narrow_spec(ws, t, {ws.d - 1, ws.d - 2, 2, 2, 2});
  Rational geometric = evaluate_concave(spec);
  Rational closed = c5_closed_form(ws);
  if (geometric != closed)
    fail(errc::pipeline_mismatch, "five-point pipeline gave " + rat_str(geometric) +
                                      ", closed form " + rat_str(closed));
  return geometric;
}

Rational five_point_narrow(const WeightSystem& ws, long long i) {
  require_fermat_main_range(ws, PolyType::fermat, "five_point_narrow");
  long long m = mod_floor(i, ws.d);
  if (m == 1 || m == ws.d - 1)
    fail(errc::index_not_narrow, "unit-adjacent index: handled by the string equation");
  narrow_element(ws, m);  // throws index_not_narrow when i is outside Nar
  return c5_closed_form(ws);
}

Rational five_point_broad(const WeightSystem& ws, long long j) {
  require_fermat_main_range(ws, PolyType::fermat, "five_point_broad");
  broad_element(ws, PolyType::fermat, j);  // throws index_out_of_range
  return -c5_closed_form(ws);
}

QuantumEulerCoefficients euler_coefficients(const WeightSystem& ws, PolyType t) {
  QuantumEulerCoefficients out;
  out.basis = basis(ws, t);
  out.lambda = lambda_invariant(ws);
  out.C_d = c5_closed_form(ws);
  out.sum_B = 0;
  if (t == PolyType::fermat) {
    for (const BasisElement& e : out.basis) {
      Rational Bi;
      if (e.is_narrow())
        Bi = (e.index == 1 || e.index == ws.d - 1) ? Rational(0) : out.C_d;
      else
        Bi = -out.C_d;
      out.B.push_back(Bi);
      out.sum_B += Bi;
    }
  }
  // chain/loop five-point coefficients stay unevaluated: B is left empty and
  // the four-point unknowns get names below
  if (t != PolyType::fermat) {
    std::vector<long long> ks = t == PolyType::chain ? std::vector<long long>{0}
                                                     : std::vector<long long>{0, ws.delta};
    for (size_t i = 0; i < out.basis.size(); ++i) {
      const BasisElement& e = out.basis[i];
      for (long long k : ks) {
        std::string name = "A[" + std::string(e.is_narrow() ? "a" : "b") +
                           std::to_string(e.index) + "," + std::to_string(k) + "]";
        out.A_symbols[{static_cast<long long>(i), k}] = name;
      }
    }
  }
  return out;
}

std::string EulerTerm::str() const {
  std::string s;
  if (!known.is_zero() || symbolic.empty()) s = known.str();
  for (const auto& [name, poly] : symbolic) {
    if (!s.empty()) s += " + ";
    s += "(" + poly.str() + ")*" + name;
  }
  return s;
}

EulerClass euler_class(const WeightSystem& ws, PolyType t) {
  EulerClass out;
  out.basis = basis(ws, t);
  out.coeff.resize(out.basis.size());
  MilnorCounts mu = milnor_counts(ws, t);

  auto at = [&](BasisElement::Kind kind, long long index) -> EulerTerm& {
    for (size_t i = 0; i < out.basis.size(); ++i)
      if (out.basis[i].kind == kind && out.basis[i].index == index) return out.coeff[i];
    fail(errc::internal, "basis element missing");
  };

  // classical limit: mu * alpha_{d-1} survives at t = 0
  at(BasisElement::Kind::narrow, ws.d - 1).known = RatPoly(Rational(mu.total));

  if (t == PolyType::fermat) {
    QuantumEulerCoefficients qe = euler_coefficients(ws, t);
    out.sum_B = qe.sum_B;
    out.alpha1_closed = RatPoly::monomial(Rational(qe.lambda) * qe.C_d, 2);
    out.alpha1_direct = RatPoly::monomial(qe.sum_B / 2, 2);
    at(BasisElement::Kind::narrow, 1).known = out.alpha1_closed;
  } else {
    // Structural form: (t^2/2) sum_i B_i on alpha_1 and t * sum_i A_{i,k} on
    // each invariant broad dual, with the sums left as named unknowns.
    at(BasisElement::Kind::narrow, 1).symbolic.push_back(
        {"sum_B", RatPoly::monomial(Rational(1, 2), 2)});
    std::vector<long long> ks = t == PolyType::chain ? std::vector<long long>{0}
                                                     : std::vector<long long>{0, ws.delta};
    for (long long k : ks) {
      BasisElement dual_k = dual(broad_element(ws, t, k), ws, t);
      at(BasisElement::Kind::broad, dual_k.index)
          .symbolic.push_back({"sum_A[" + std::to_string(k) + "]", RatPoly::monomial(1, 1)});
    }
  }
  return out;
}

EulerMatrix euler_multiplication_matrix(const WeightSystem& ws) {
  require_fermat_main_range(ws, PolyType::fermat, "euler_multiplication_matrix");
  MilnorCounts mu = milnor_counts(ws, PolyType::fermat);
  Rational C = c5_closed_form(ws);
  Rational lam = lambda_invariant(ws);

  EulerMatrix m;
  // E * alpha_1 = lambda C t^2 alpha_1 + mu alpha_{d-1};
  // E * alpha_{d-1} = mu C(4,2) C_d^2 t^4/4! alpha_1 + lambda C t^2 alpha_{d-1}.
  m.block[0][0] = RatPoly::monomial(lam * C, 2);
  m.block[0][1] = RatPoly::monomial(Rational(6 * mu.total) * C * C / 24, 4);
  m.block[1][0] = RatPoly(Rational(mu.total));
  m.block[1][1] = m.block[0][0];
  m.narrow_diag = RatPoly::monomial((lam + Rational(mu.total, 2)) * C, 2);
  m.narrow_mult = mu.nar - 2;
  m.broad_diag = RatPoly::monomial((lam - Rational(mu.total, 2)) * C, 2);
  m.broad_mult = mu.bro;
  m.block_det = m.block[0][0] * m.block[1][1] - m.block[0][1] * m.block[1][0];

  m.determinant = m.block_det;
  for (long long i = 0; i < m.narrow_mult; ++i) m.determinant = m.determinant * m.narrow_diag;
  for (long long i = 0; i < m.broad_mult; ++i) m.determinant = m.determinant * m.broad_diag;
  return m;
}

bool seven_point_check(const WeightSystem& ws) {
  require_fermat_main_range(ws, PolyType::fermat, "seven_point_check");
  // (1/4!) <a_{d-1}^3, a_2^4> = ((1/2) C_d)^2 defines the seven-point value;
  // it must match the coefficient (4 choose 2) C_d^2 / 4! appearing in the
  // alpha_{d-1} * alpha_{d-1} product. Checked as polynomials in C_d.
  RatPoly c = RatPoly::monomial(1, 1);
  RatPoly lhs_over_4f = (Rational(1, 2) * c) * (Rational(1, 2) * c);
  RatPoly product_coeff = Rational(6, 24) * (c * c);
  return lhs_over_4f == product_coeff;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::semisimple: return "semisimple";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::conjectured_only: return "conjectured-only";
    case Verdict::small_charge_semisimple: return "small-charge-semisimple";
  }
  return "?";
}

const char* family_name(SmallChargeFamily f) {
  switch (f) {
    case SmallChargeFamily::none: return "none";
    case SmallChargeFamily::ade_list: return "ade-singularity-list";
    case SmallChargeFamily::fermat_two_variable: return "fermat-x^m+y^2-reduction";
    case SmallChargeFamily::loop_to_chain: return "loop-to-chain-equivalence";
    case SmallChargeFamily::idempotent_pair: return "idempotent-pair";
  }
  return "?";
}

namespace {

SmallChargeFamily small_charge_family(const InvertiblePolynomial& p) {
  long long lo = std::min(p.a1, p.a2), hi = std::max(p.a1, p.a2);
  switch (p.type) {
    case PolyType::fermat:
      if (lo == 2 && hi == 2) return SmallChargeFamily::idempotent_pair;
      if (lo == 2) return SmallChargeFamily::fermat_two_variable;
      return SmallChargeFamily::ade_list;  // x^3 + y^{3,4,5}
    case PolyType::chain:
      return SmallChargeFamily::ade_list;  // x^{n-1}+x*y^2, x^{n-1}*y+y^2, x^3+x*y^3
    case PolyType::loop:
      return SmallChargeFamily::loop_to_chain;  // x^m*y + x*y^2 up to swap
  }
  return SmallChargeFamily::none;
}

}  // namespace

SemisimplicityReport semisimplicity_verdict(const InvertiblePolynomial& p) {
  SemisimplicityReport r;
  r.poly = p;
  r.ws = weight_system(p);
  r.mu = milnor_counts(r.ws, p.type);

  if (r.ws.chat < 1) {
    r.verdict = Verdict::small_charge_semisimple;
    r.family = small_charge_family(p);
    switch (r.family) {
      case SmallChargeFamily::idempotent_pair:
        r.citations = {"semisimple: explicit idempotents (alpha_1 +- beta_1)/2"};
        break;
      case SmallChargeFamily::fermat_two_variable:
        r.citations = {"semisimple: theory matches the one-variable power / boundary chain case"};
        break;
      case SmallChargeFamily::loop_to_chain:
        r.citations = {"semisimple: loop theory matches the chain x^{2m-1}+x*y^2 theory"};
        break;
      default:
        r.citations = {"semisimple: simple-singularity list, mirror is a Morse deformation"};
        break;
    }
    return r;
  }

  if (p.type != PolyType::fermat) {
    r.verdict = Verdict::conjectured_only;
    r.citations = {"conjectured: broad four-point coefficients are not determined here"};
    return r;
  }

  // Fermat, central charge >= 1: Euler-class unit criterion.
  QuantumEulerCoefficients qe = euler_coefficients(r.ws, p.type);
  r.C_d = c5(r.ws, p.type);  // geometric evaluation, checked against the closed form
  r.lambda = qe.lambda;
  r.sum_B = qe.sum_B;
  Rational half_mu = Rational(r.mu.total, 2);
  r.lambda_plus = Rational(qe.lambda) + half_mu;
  r.lambda_minus = Rational(qe.lambda) - half_mu;

  bool unit = (*r.C_d != 0) && (*r.lambda_plus != 0) && (*r.lambda_minus != 0);
  r.verdict = unit ? Verdict::semisimple : Verdict::inconclusive;
  r.citations = {unit ? "semisimple: quantum Euler class is a unit at generic t"
                      : "inconclusive: Euler multiplication is singular on a diagonal block"};
  return r;
}

}  // namespace fjrw
