#include <fjrw/tables.hpp>

#include <fjrw/correlator.hpp>

namespace fjrw {

std::vector<IntersectionRow> intersection_table() {
  std::vector<IntersectionRow> rows;
  const Model m5 = Model::m05;
  rows.push_back({"k2", integrate_m05(TautClass::kappa2(m5))});
  TautClass k1 = TautClass::kappa1(m5);
  rows.push_back({"k1^2", integrate_m05(multiply(k1, k1))});
  for (int i = 1; i <= 5; ++i)
    rows.push_back({"k1*psi_" + std::to_string(i),
                    integrate_m05(multiply(k1, TautClass::psi(m5, i)))});
  for (const BoundaryIndex& K : all_boundaries(m5))
    rows.push_back({"k1*D" + K.str(), integrate_m05(multiply(k1, TautClass::boundary(K)))});
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j)
      rows.push_back({"psi_" + std::to_string(i) + "*psi_" + std::to_string(j),
                      integrate_m05(multiply(TautClass::psi(m5, i), TautClass::psi(m5, j)))});
  for (int i = 1; i <= 5; ++i)
    for (const BoundaryIndex& K : all_boundaries(m5))
      rows.push_back({"psi_" + std::to_string(i) + "*D" + K.str(),
                      integrate_m05(multiply(TautClass::psi(m5, i), TautClass::boundary(K)))});
  const auto& bs = all_boundaries(m5);
  for (size_t a = 0; a < bs.size(); ++a)
    for (size_t b = a; b < bs.size(); ++b)
      rows.push_back({"D" + bs[a].str() + "*D" + bs[b].str(),
                      integrate_m05(multiply(TautClass::boundary(bs[a]),
                                             TautClass::boundary(bs[b])))});
  return rows;
}

TautClass bernoulli_group_class(int group) {
  const Model m5 = Model::m05;
  auto D = [&](std::initializer_list<int> marks) {
    return TautClass::boundary(BoundaryIndex(m5, marks));
  };
  switch (group) {
    case 0:
      return D({1, 5}) + D({1, 2, 4}) + D({1, 3, 4});
    case 1:
      return TautClass::kappa1(m5) - TautClass::psi(m5, 5) + D({1, 4}) + D({1, 2, 5}) +
             D({1, 3, 5});
    case 2:
      return Rational(-1) * (TautClass::psi(m5, 1) + TautClass::psi(m5, 2) +
                             TautClass::psi(m5, 3) + TautClass::psi(m5, 4));
    case 3:
      return D({1, 2}) + D({1, 3}) + D({1, 4, 5});
    case 4:
      return D({1, 2, 3});
  }
  fail(errc::internal, "Bernoulli group index out of range");
}

Rational bracket_coefficient(int g, int h) {
  return integrate_m05(multiply(bernoulli_group_class(g), bernoulli_group_class(h)));
}

Rational b_value(const WeightSystem& ws, int axis, int k) {
  long long w = axis == 1 ? ws.w1 : ws.w2;
  return bernoulli_B(2, Rational(k * w, ws.d));
}

MonomialTable monomial_table(const WeightSystem& ws) {
  MonomialTable table;
  table.total = 0;
  table.expected = Int(144) * ws.d * ws.d * ws.w1 * ws.w2;
  const Int scale = Int(36) * ws.d * ws.d * Int(ws.d) * ws.d;

  auto name = [](int g, char axis) {
    std::string s = "b" + std::to_string(g);
    if (g != 0) s += std::string("^") + axis;
    return s;
  };

  for (int g = 0; g <= 4; ++g) {
    for (int h = 0; h <= 4; ++h) {
      MonomialRow row;
      row.gx = g;
      row.hy = h;
      row.monomial = name(g, 'x') + "*" + name(h, 'y');
      Rational coeff = bracket_coefficient(g, h);
      if (!is_integer(coeff)) fail(errc::internal, "non-integer bracket coefficient");
      row.coefficient = static_cast<long long>(numerator(coeff));
      Rational scaled = Rational(scale) * b_value(ws, 1, g) * b_value(ws, 2, h) * coeff;
      if (!is_integer(scaled)) fail(errc::internal, "monomial row failed to clear denominators");
      row.scaled = numerator(scaled);
      table.total += row.scaled;
      table.rows.push_back(row);
    }
  }
  return table;
}

}  // namespace fjrw
