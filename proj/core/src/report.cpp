#include <fjrw/report.hpp>

namespace fjrw {

Json to_json(const BasisElement& e) {
  Json j;
  if (e.is_narrow()) {
    j["kind"] = "narrow";
    j["m"] = e.index;
  } else {
    j["kind"] = "broad";
    j["k"] = e.index;
    j["monomial"] = {e.monomial->first, e.monomial->second};
  }
  return j;
}

Json report_json(const SemisimplicityReport& r) {
  Json j;
  j["input"] = r.poly.source;
  j["type"] = type_name(r.poly.type);
  j["permutation_applied"] = r.poly.swapped;
  j["weight_system"] = {{"d", r.ws.d}, {"w1", r.ws.w1}, {"w2", r.ws.w2}, {"delta", r.ws.delta}};
  j["chat"] = rat_str(r.ws.chat);
  j["mu"] = {{"total", r.mu.total}, {"nar", r.mu.nar}, {"bro", r.mu.bro}};
  if (r.C_d) j["C_d"] = rat_str(*r.C_d);
  if (r.lambda) j["lambda"] = *r.lambda;
  j["verdict"] = verdict_name(r.verdict);
  Json w = Json::object();
  if (r.lambda_plus) w["lambda_plus_half_mu"] = rat_str(*r.lambda_plus);
  if (r.lambda_minus) w["lambda_minus_half_mu"] = rat_str(*r.lambda_minus);
  if (r.sum_B) w["sum_B"] = rat_str(*r.sum_B);
  if (r.family != SmallChargeFamily::none) w["small_charge_family"] = family_name(r.family);
  j["witnesses"] = w;
  j["citations"] = r.citations;
  Json basis_list = Json::array();
  for (const BasisElement& e : basis(r.ws, r.poly.type)) {
    Json be = to_json(e);
    be["degree"] = rat_str(e.degree);
    basis_list.push_back(be);
  }
  j["basis"] = basis_list;
  return j;
}

CorrelatorOutcome evaluate_with_diagnostics(const CorrelatorSpec& spec) {
  CorrelatorOutcome o{spec, line_bundle_degrees(spec), nonvanishing_check(spec), {}, {}, {}};
  if (!spec.all_narrow()) {
    o.note = "broad insertions are not evaluated geometrically";
    return o;
  }
  if (spec.k() < 3 || spec.k() > 5) {
    o.note = "unsupported arity";
    return o;
  }
  if (spec.ws.has_weight_half()) {
    o.note = "weight-1/2 variable: use the small-charge verdict table";
    return o;
  }
  if (!o.check.selection) {
    o.value = 0;
    o.note = "selection rule fails: deg L_1 = " + rat_str(o.degrees.deg1) +
             ", deg L_2 = " + rat_str(o.degrees.deg2) + " must both be integers";
    return o;
  }
  o.profile = rank_profile(spec);
  if (o.profile->kase == ConcavityCase::not_concave) {
    o.note = "not concave: " + o.profile->failure;
    return o;
  }
  o.value = evaluate_concave(spec);
  if (!o.check.degree && *o.value == 0) o.note = "degree condition fails";
  return o;
}

Json correlator_json(const CorrelatorOutcome& o) {
  Json j;
  Json ins = Json::array();
  for (const BasisElement& e : o.spec.insertions) ins.push_back(to_json(e));
  j["insertions"] = ins;
  j["deg_L"] = {rat_str(o.degrees.deg1), rat_str(o.degrees.deg2)};
  j["nonvanishing"] = {{"selection", o.check.selection},
                       {"degree", o.check.degree},
                       {"gw_invariance", o.check.gw_invariance}};
  if (o.profile) {
    j["ranks"] = {o.profile->rank1, o.profile->rank2};
    j["case"] = o.profile->kase == ConcavityCase::case_a    ? "A"
                : o.profile->kase == ConcavityCase::case_b ? "B"
                                                           : "not-concave";
    if (!o.profile->broad_nodes.empty()) {
      Json bn = Json::array();
      for (const BoundaryIndex& K : o.profile->broad_nodes) bn.push_back(K.str());
      j["vanishing_phase_nodes"] = bn;
    }
  }
  if (o.value) j["value"] = rat_str(*o.value);
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

Json euler_json(const InvertiblePolynomial& p) {
  WeightSystem ws = weight_system(p);
  EulerClass e = euler_class(ws, p.type);
  Json j;
  j["input"] = p.source;
  j["type"] = type_name(p.type);
  Json coeffs = Json::object();
  for (size_t i = 0; i < e.basis.size(); ++i) {
    if (e.coeff[i].is_known() && e.coeff[i].known.is_zero()) continue;
    const BasisElement& b = e.basis[i];
    std::string key = (b.is_narrow() ? "alpha_" : "beta_") + std::to_string(b.index);
    coeffs[key] = e.coeff[i].str();
  }
  j["euler_class"] = coeffs;
  if (p.type == PolyType::fermat && ws.chat >= 1) {
    j["alpha1_closed_form"] = e.alpha1_closed.str();
    j["alpha1_direct_sum"] = e.alpha1_direct.str();
    j["sum_B"] = rat_str(e.sum_B);
    EulerMatrix m = euler_multiplication_matrix(ws);
    Json block = Json::array();
    block.push_back(Json::array({m.block[0][0].str(), m.block[0][1].str()}));
    block.push_back(Json::array({m.block[1][0].str(), m.block[1][1].str()}));
    j["matrix"] = Json::object();
    j["matrix"]["block"] = block;
    j["matrix"]["narrow_diagonal"] = m.narrow_diag.str();
    j["matrix"]["narrow_multiplicity"] = m.narrow_mult;
    j["matrix"]["broad_diagonal"] = m.broad_diag.str();
    j["matrix"]["broad_multiplicity"] = m.broad_mult;
    j["matrix"]["block_det"] = m.block_det.str();
    j["matrix"]["determinant_nonzero"] = !m.determinant.is_zero();
  }
  return j;
}

Json sweep_json(const std::vector<SweepRow>& rows, long long d_max) {
  Json j;
  j["dmax"] = d_max;
  Json out_rows = Json::array();
  long long counts[4] = {0, 0, 0, 0};
  Json inconclusive = Json::array();
  for (const SweepRow& r : rows) {
    Json row;
    row["type"] = type_name(r.key.type);
    row["polynomial"] = r.polynomial;
    row["delta"] = r.key.delta;
    row["w1"] = r.key.w1;
    row["w2"] = r.key.w2;
    row["d"] = r.d;
    row["chat"] = rat_str(r.chat);
    row["mu"] = r.mu.total;
    row["lambda"] = r.lambda;
    row["verdict"] = verdict_name(r.verdict);
    if (r.family != SmallChargeFamily::none) row["family"] = family_name(r.family);
    out_rows.push_back(row);
    counts[static_cast<int>(r.verdict)]++;
    if (r.verdict == Verdict::inconclusive) inconclusive.push_back(row);
  }
  j["rows"] = out_rows;
  j["summary"] = {{"total", rows.size()},
                  {"semisimple", counts[static_cast<int>(Verdict::semisimple)]},
                  {"inconclusive", counts[static_cast<int>(Verdict::inconclusive)]},
                  {"conjectured_only", counts[static_cast<int>(Verdict::conjectured_only)]},
                  {"small_charge_semisimple",
                   counts[static_cast<int>(Verdict::small_charge_semisimple)]}};
  j["inconclusive"] = inconclusive;
  return j;
}

Json tables_json(const std::optional<WeightSystem>& ws) {
  Json j;
  Json rows = Json::array();
  for (const IntersectionRow& r : intersection_table())
    rows.push_back({{"class", r.cls}, {"value", rat_str(r.value)}});
  j["intersection_table"] = rows;
  if (ws) {
    MonomialTable t = monomial_table(*ws);
    Json mrows = Json::array();
    for (const MonomialRow& r : t.rows)
      mrows.push_back({{"monomial", r.monomial},
                       {"coefficient", r.coefficient},
                       {"scaled", r.scaled.str()}});
    j["monomial_table"] = {{"d", ws->d},
                           {"w1", ws->w1},
                           {"w2", ws->w2},
                           {"rows", mrows},
                           {"total", t.total.str()},
                           {"expected", t.expected.str()},
                           {"matches", t.matches()}};
  }
  return j;
}

}  // namespace fjrw
