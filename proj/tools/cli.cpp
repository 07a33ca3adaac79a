#include "cli.hpp"

#include <fjrw/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fjrw::cli {

namespace {

bool color_enabled() { return std::getenv("FJRW_NO_COLOR") == nullptr; }

std::string bold(const std::string& s) {
  return color_enabled() ? "\033[1m" + s + "\033[0m" : s;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(errc::unsupported, "cannot open output file " + out_path);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// --- token grammar for insertions: a{m} (narrow) / b{k} (broad) ---
BasisElement parse_insertion(const std::string& tok, const WeightSystem& ws, PolyType t) {
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
    fail(errc::syntax_error, "insertion token '" + tok + "' must look like a{m} or b{k}");
  long long idx = 0;
  for (size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      fail(errc::syntax_error, "insertion token '" + tok + "' must look like a{m} or b{k}");
    idx = idx * 10 + (tok[i] - '0');
  }
  return tok[0] == 'a' ? narrow_element(ws, idx) : broad_element(ws, t, idx);
}

std::string verdict_line(const SemisimplicityReport& r) {
  std::string line = std::string("verdict: ") + verdict_name(r.verdict);
  if (r.family != SmallChargeFamily::none)
    line += std::string(" [") + family_name(r.family) + "]";
  return line;
}

int cmd_report(const std::string& poly, bool json, const std::string& out_path,
               std::ostream& out) {
  SemisimplicityReport r = semisimplicity_verdict(parse_polynomial(poly));
  if (json) {
    emit(json_text(report_json(r)), out_path, out);
    return 0;
  }
  std::ostringstream s;
  s << bold(r.poly.source) << "  (" << type_name(r.poly.type)
    << (r.poly.swapped ? ", variables permuted" : "") << ")\n";
  s << "weight system: (d; w1, w2) = (" << r.ws.d << "; " << r.ws.w1 << ", " << r.ws.w2
    << "), delta = " << r.ws.delta << ", central charge = " << rat_str(r.ws.chat) << "\n";
  s << "state space: mu = " << r.mu.total << " (narrow " << r.mu.nar << ", broad " << r.mu.bro
    << ")\n";
  s << "basis degrees:\n";
  for (const BasisElement& e : basis(r.ws, r.poly.type)) {
    s << "  " << (e.is_narrow() ? "alpha_" : "beta_") << e.index;
    if (e.monomial)
      s << " = x^" << e.monomial->first << " y^" << e.monomial->second << " dx^dy";
    s << "  deg " << rat_str(e.degree) << "\n";
  }
  if (r.C_d) s << "C_d = " << rat_str(*r.C_d) << "\n";
  if (r.lambda)
    s << "lambda = " << *r.lambda << ", lambda + mu/2 = " << rat_str(*r.lambda_plus)
      << ", lambda - mu/2 = " << rat_str(*r.lambda_minus) << ", sum_B = " << rat_str(*r.sum_B)
      << "\n";
  s << bold(verdict_line(r)) << "\n";
  for (const std::string& c : r.citations) s << "  " << c << "\n";
  emit(s.str(), out_path, out);
  return 0;
}

int cmd_correlator(const std::string& poly, const std::vector<std::string>& tokens, bool json,
                   const std::string& out_path, std::ostream& out) {
  InvertiblePolynomial p = parse_polynomial(poly);
  WeightSystem ws = weight_system(p);
  CorrelatorSpec spec{ws, p.type, {}};
  for (const std::string& tok : tokens) spec.insertions.push_back(parse_insertion(tok, ws, p.type));
  if (spec.k() < 3 || spec.k() > 5)
    fail(errc::unsupported_arity, "need 3 to 5 insertions, got " + std::to_string(spec.k()));

  CorrelatorOutcome o = evaluate_with_diagnostics(spec);
  if (json) {
    Json j = correlator_json(o);
    j["polynomial"] = p.source;
    emit(json_text(j), out_path, out);
  } else {
    std::ostringstream s;
    s << "deg L = (" << rat_str(o.degrees.deg1) << ", " << rat_str(o.degrees.deg2) << ")\n";
    s << "nonvanishing: selection " << (o.check.selection ? "ok" : "FAILS") << ", degree "
      << (o.check.degree ? "ok" : "FAILS") << ", invariance "
      << (o.check.gw_invariance ? "ok" : "FAILS") << "\n";
    if (o.profile) {
      s << "ranks R^1 = (" << o.profile->rank1 << ", " << o.profile->rank2 << ")";
      if (o.profile->kase != ConcavityCase::not_concave)
        s << "  case " << (o.profile->kase == ConcavityCase::case_a ? "A" : "B");
      s << "\n";
    }
    if (!o.note.empty()) s << o.note << "\n";
    if (o.value) s << bold("value = " + rat_str(*o.value)) << "\n";
    emit(s.str(), out_path, out);
  }
  if (!o.value) fail(errc::not_concave, o.note.empty() ? "no value" : o.note);
  return 0;
}

int cmd_euler(const std::string& poly, bool json, const std::string& out_path,
              std::ostream& out) {
  InvertiblePolynomial p = parse_polynomial(poly);
  Json j = euler_json(p);
  if (json) {
    emit(json_text(j), out_path, out);
    return 0;
  }
  std::ostringstream s;
  s << bold("E(t*alpha_2)") << " for " << p.source << ":\n";
  for (const auto& [key, val] : j["euler_class"].items())
    s << "  " << key << ": " << val.get<std::string>() << "\n";
  if (j.contains("matrix")) {
    s << "closed form on alpha_1: " << j["alpha1_closed_form"].get<std::string>()
      << "   (direct sum: " << j["alpha1_direct_sum"].get<std::string>() << ")\n";
    const Json& m = j["matrix"];
    s << "multiplication matrix block on {alpha_1, alpha_{d-1}}:\n";
    s << "  [" << m["block"][0][0].get<std::string>() << ", " << m["block"][0][1].get<std::string>()
      << "]\n  [" << m["block"][1][0].get<std::string>() << ", "
      << m["block"][1][1].get<std::string>() << "]\n";
    s << "narrow diagonal: " << m["narrow_diagonal"].get<std::string>() << " (x"
      << m["narrow_multiplicity"] << ")\n";
    s << "broad diagonal: " << m["broad_diagonal"].get<std::string>() << " (x"
      << m["broad_multiplicity"] << ")\n";
    s << "determinant nonzero at generic t: "
      << (m["determinant_nonzero"].get<bool>() ? "yes" : "no") << "\n";
  }
  emit(s.str(), out_path, out);
  return 0;
}

std::vector<PolyType> types_for(const std::string& name) {
  if (name == "fermat") return {PolyType::fermat};
  if (name == "chain") return {PolyType::chain};
  if (name == "loop") return {PolyType::loop};
  if (name == "all") return {PolyType::fermat, PolyType::chain, PolyType::loop};
  fail(errc::syntax_error, "unknown type '" + name + "'");
}

int cmd_sweep(const std::string& type, long long d_max, bool json, const std::string& out_path,
              std::ostream& out) {
  if (d_max < 4) fail(errc::unsupported, "--dmax must be at least 4");
  std::vector<SweepRow> rows;
  for (PolyType t : types_for(type)) {
    std::vector<SweepRow> part = sweep(t, d_max);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  if (json) {
    emit(json_text(sweep_json(rows, d_max)), out_path, out);
    return 0;
  }
  std::ostringstream s;
  s << bold("sweep") << " type=" << type << " dmax=" << d_max << "\n";
  long long inconclusive = 0;
  for (const SweepRow& r : rows) {
    s << "  " << r.polynomial << "  d=" << r.d << " delta=" << r.key.delta << " w=(" << r.key.w1
      << "," << r.key.w2 << ")  " << verdict_name(r.verdict);
    if (r.family != SmallChargeFamily::none) s << " [" << family_name(r.family) << "]";
    s << "\n";
    if (r.verdict == Verdict::inconclusive) ++inconclusive;
  }
  s << "total " << rows.size() << ", inconclusive " << inconclusive << "\n";
  emit(s.str(), out_path, out);
  return 0;
}

int cmd_tables(const std::string& poly, bool json, const std::string& out_path,
               std::ostream& out) {
  std::optional<WeightSystem> ws;
  if (!poly.empty()) ws = weight_system(parse_polynomial(poly));
  Json j = tables_json(ws);
  if (json) {
    emit(json_text(j), out_path, out);
    return 0;
  }
  std::ostringstream s;
  s << bold("intersection numbers (5 markings, degree 2)") << "\n";
  for (const auto& row : j["intersection_table"])
    s << "  " << row["class"].get<std::string>() << " -> " << row["value"].get<std::string>()
      << "\n";
  if (ws) {
    MonomialTable t = monomial_table(*ws);
    s << bold("monomial table") << " scaled by 36*d^4, d=" << ws->d << " w=(" << ws->w1 << ","
      << ws->w2 << ")\n";
    for (const MonomialRow& r : t.rows)
      s << "  " << r.monomial << "  n=" << r.coefficient << "  -> " << r.scaled.str() << "\n";
    s << "total = " << t.total.str() << ", expected 144*d^2*w1*w2 = " << t.expected.str()
      << (t.matches() ? "  (match)" : "  (MISMATCH)") << "\n";
    if (!t.matches()) fail(errc::pipeline_mismatch, "monomial table total mismatch");
  }
  emit(s.str(), out_path, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus-0 computations for two-variable singularity pairs"};
  app.require_subcommand(1);

  std::string poly, type = "fermat", out_path;
  std::vector<std::string> tokens;
  long long d_max = 60;
  bool json = false;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", json, "emit JSON");
    c->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* report = app.add_subcommand("report", "classify and report one polynomial");
  report->add_option("polynomial", poly)->required();
  add_common(report);

  CLI::App* corr = app.add_subcommand("correlator", "evaluate a concave correlator");
  corr->add_option("polynomial", poly)->required();
  corr->add_option("insertions", tokens, "tokens a{m} / b{k}")->required()->expected(-1);
  add_common(corr);

  CLI::App* euler = app.add_subcommand("euler", "quantum Euler class and multiplication");
  euler->add_option("polynomial", poly)->required();
  add_common(euler);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "verdicts over all weight systems");
  sweep_cmd->add_option("--type", type, "fermat|chain|loop|all");
  sweep_cmd->add_option("--dmax", d_max, "degree bound (4..10000)");
  add_common(sweep_cmd);

  CLI::App* tables = app.add_subcommand("tables", "intersection and monomial tables");
  tables->add_option("polynomial", poly);
  add_common(tables);

  std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 parses reversed
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (report->parsed()) return cmd_report(poly, json, out_path, out);
    if (corr->parsed()) return cmd_correlator(poly, tokens, json, out_path, out);
    if (euler->parsed()) return cmd_euler(poly, json, out_path, out);
    if (sweep_cmd->parsed()) return cmd_sweep(type, d_max, json, out_path, out);
    if (tables->parsed()) return cmd_tables(poly, json, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace fjrw::cli
