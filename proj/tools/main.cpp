#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "valivt/counterexample.hpp"
#include "valivt/ivt.hpp"
#include "valivt/parse.hpp"
#include "valivt/series.hpp"

using json = nlohmann::ordered_json;
using namespace valivt;

namespace {

enum class OutputMode { json, text, csv };

struct Common {
  std::string field = "puiseux";
  OutputMode mode = OutputMode::text;
  std::optional<std::string> precision;
  long seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--field", c.field, "field model: puiseux, laurent, padic:p");
  cmd->add_flag_callback("--json", [&c] { c.mode = OutputMode::json; });
  cmd->add_flag_callback("--text", [&c] { c.mode = OutputMode::text; });
  cmd->add_flag_callback("--csv", [&c] { c.mode = OutputMode::csv; });
  cmd->add_option("--precision", c.precision, "working precision p/q");
  cmd->add_option("--seed", c.seed, "seed recorded in reports");
}

// Working precision: flag, then VALIVT_PRECISION, then 8.
Rat resolve_precision(const Common& c) {
  if (c.precision) return rat_from_string(*c.precision);
  if (const char* env = std::getenv("VALIVT_PRECISION"))
    return rat_from_string(env);
  return Rat(8);
}

json base_report() { return json{{"schema", "valivt/1"}}; }

void emit(const json& j, OutputMode mode) {
  if (mode == OutputMode::json) {
    std::cout << j.dump() << "\n";
    return;
  }
  // default text rendering: key: value lines
  for (const auto& [k, v] : j.items()) {
    if (k == "schema") continue;
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
  }
}

json slopes_json(const std::vector<SlopeMult>& slopes) {
  json out = json::array();
  for (const SlopeMult& s : slopes)
    out.push_back({{"h", s.h.to_string()}, {"mult", s.multiplicity}});
  return out;
}

// Affine segments of phi_f between consecutive polygon slopes. The slope on
// a segment is the active degree at any interior point; the intercept is the
// matching coefficient valuation.
json phi_segments(const Polynomial& f) {
  TropicalForm t = TropicalForm::of(f);
  std::vector<GroupValue> bps;
  for (const SlopeMult& s : newton_polygon(t)) bps.push_back(s.h);

  json out = json::array();
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    GroupValue sample =
        i == 0 ? (bps.empty() ? GroupValue(Rat(0))
                              : sub(bps[0], GroupValue(Rat(1))))
               : bps[i - 1];
    int deg = t.active_degree(sample);
    GroupValue intercept = GroupValue::infinity();
    for (const TropicalTerm& term : t.terms())
      if (term.degree == deg) intercept = term.coeff_val;
    out.push_back(
        {{"segment",
          {i == 0 ? "-inf" : bps[i - 1].to_string(),
           i == bps.size() ? "inf" : bps[i].to_string()}},
         {"slope", deg},
         {"intercept", intercept.to_string()}});
  }
  return out;
}

json solution_json(const IVTSolution& s) {
  json out{{"c", s.c.to_string()},
           {"v_c", s.vc.to_string()},
           {"achieved", s.achieved.to_string()},
           {"case", ivt_case_name(s.kase)}};
  if (s.retries > 0) out["retries"] = s.retries;
  return out;
}

json report_json(const CounterexampleReport& rep) {
  json checks = json::array();
  for (const CheckRecord& c : rep.checks)
    checks.push_back({{"input", c.input},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"pass", c.pass}});
  return json{{"model", rep.model.name()},
              {"construction", rep.construction},
              {"checks", checks},
              {"conclusion", rep.ivt_fails_as_predicted
                                 ? "ivt-fails-as-predicted"
                                 : "unexpected"},
              {"note", rep.note}};
}

// "lo:hi:step" with exact rational entries.
std::vector<Rat> parse_sample_grid(const std::string& s) {
  std::size_t c1 = s.find(':');
  std::size_t c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw SyntaxError(s.size(), "lo:hi:step", "malformed sample range");
  Rat lo = rat_from_string(s.substr(0, c1));
  Rat hi = rat_from_string(s.substr(c1 + 1, c2 - c1 - 1));
  Rat step = rat_from_string(s.substr(c2 + 1));
  if (sgn(step) <= 0)
    fail(ErrorKind::precondition, "sample step must be positive");
  std::vector<Rat> grid;
  for (Rat g = lo; cmp(g, hi) <= 0; g += step) grid.push_back(g);
  return grid;
}

json factorization_json(const WeierstrassFactorization& W) {
  json pc = json::array();
  for (int i = 0; i <= W.P.degree(); ++i) pc.push_back(W.P.coeff(i).to_string());
  json bc = json::array();
  for (long n = 0; n < W.B.head_size(); ++n)
    bc.push_back(W.B.coefficient(n).to_string());
  json out{{"N", W.N}, {"P", pc}, {"B_head", bc},
           {"precision", rat_to_string(W.precision)}};
  if (W.B.tail()) {
    out["B_tail"] = {{"scale", W.B.tail()->scale.to_string()},
                     {"ratio", W.B.tail()->ratio.to_string()},
                     {"start", W.B.tail()->start}};
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"valuation IVT toolkit"};
  app.require_subcommand(1);

  Common c;

  // polygon
  auto* polygon = app.add_subcommand("polygon", "Newton polygon and phi segments");
  std::string poly_src;
  polygon->add_option("--poly", poly_src, "polynomial in X")->required();
  add_common(polygon, c);

  // phi
  auto* phi = app.add_subcommand("phi", "evaluate/sample the tropicalization");
  std::string phi_poly, phi_gamma, phi_sample;
  phi->add_option("--poly", phi_poly, "polynomial in X")->required();
  phi->add_option("--gamma", phi_gamma, "single evaluation point");
  phi->add_option("--sample", phi_sample, "grid lo:hi:step");
  add_common(phi, c);

  // ivt
  auto* ivt = app.add_subcommand("ivt", "solve v(f(c)) = alpha");
  std::string ivt_poly, ivt_a, ivt_b, ivt_alpha;
  int ivt_count = 1;
  ivt->add_option("--poly", ivt_poly)->required();
  ivt->add_option("--a", ivt_a)->required();
  ivt->add_option("--b", ivt_b)->required();
  ivt->add_option("--alpha", ivt_alpha)->required();
  ivt->add_option("--count", ivt_count, "number of distinct solutions");
  add_common(ivt, c);

  // counterexample
  auto* cex = app.add_subcommand("counterexample",
                                 "verify a hypothesis-necessity construction");
  std::string cex_kind;
  unsigned long cex_p = 2;
  long cex_n = 2, cex_h = 1, cex_lo = -3, cex_hi = 3;
  std::string cex_k = "t";
  cex->add_option("kind", cex_kind,
                  "finite-residue | divisibility | locally-constant")
      ->required();
  cex->add_option("--p", cex_p, "residue characteristic");
  cex->add_option("--n", cex_n, "exponent of X^n");
  cex->add_option("--hval", cex_h, "target valuation");
  cex->add_option("--grid-min", cex_lo);
  cex->add_option("--grid-max", cex_hi);
  cex->add_option("--k", cex_k, "element with v(k) > 0");
  add_common(cex, c);

  // series subcommands
  auto* sfac = app.add_subcommand("series-factor",
                                  "distinguished-polynomial factorization");
  auto* sivt = app.add_subcommand("series-ivt", "series IVT solver");
  auto* sphi = app.add_subcommand("series-phi", "phi of a series");
  auto* szer = app.add_subcommand("series-zeros", "zero valuations above a point");
  std::string ser_src, ser_a, ser_b, ser_alpha, ser_beta, ser_gamma, ser_sample;
  for (CLI::App* s : {sfac, sivt, sphi, szer}) {
    s->add_option("--series", ser_src, "head: [...]; tail: ...")->required();
    add_common(s, c);
  }
  sfac->add_option("--a", ser_a, "normalization point (default 1)");
  sivt->add_option("--a", ser_a)->required();
  sivt->add_option("--b", ser_b)->required();
  sivt->add_option("--alpha", ser_alpha)->required();
  sphi->add_option("--beta", ser_beta, "base valuation (default 0)");
  sphi->add_option("--gamma", ser_gamma, "single evaluation point");
  sphi->add_option("--sample", ser_sample, "grid lo:hi:step, all >= beta");
  szer->add_option("--a", ser_a, "base point (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 4;
  }

  FieldSpec spec = field_spec_from_name(c.field);
  Rat pi = resolve_precision(c);
  json out = base_report();

  try {
    if (*polygon) {
      Polynomial f = parse_polynomial(spec, poly_src);
      out["slopes"] = slopes_json(newton_polygon(f));
      out["phi"] = phi_segments(f);
      emit(out, c.mode);
    } else if (*phi) {
      Polynomial f = parse_polynomial(spec, phi_poly);
      out["phi"] = phi_segments(f);
      if (!phi_gamma.empty()) {
        GroupValue g = parse_group_value(phi_gamma);
        out["gamma"] = g.to_string();
        out["value"] = phi_eval(f, g).to_string();
      }
      if (!phi_sample.empty()) {
        if (c.mode == OutputMode::csv) {
          std::cout << "gamma,phi\n";
          for (const Rat& g : parse_sample_grid(phi_sample))
            std::cout << rat_to_string(g) << ","
                      << phi_eval(f, GroupValue(g)).to_string() << "\n";
          return 0;
        }
        json samples = json::array();
        for (const Rat& g : parse_sample_grid(phi_sample))
          samples.push_back({{"gamma", rat_to_string(g)},
                             {"phi", phi_eval(f, GroupValue(g)).to_string()}});
        out["samples"] = samples;
      }
      emit(out, c.mode);
    } else if (*ivt) {
      IVTQuery q{parse_polynomial(spec, ivt_poly), parse_element(spec, ivt_a),
                 parse_element(spec, ivt_b), parse_group_value(ivt_alpha)};
      if (ivt_count <= 1) {
        json s = solution_json(ivt_solve(q));
        for (auto& [k, v] : s.items()) out[k] = v;
      } else {
        json sols = json::array();
        for (const IVTSolution& s : ivt_enumerate(q, ivt_count))
          sols.push_back(solution_json(s));
        out["solutions"] = sols;
      }
      emit(out, c.mode);
    } else if (*cex) {
      CounterexampleReport rep;
      if (cex_kind == "finite-residue") {
        std::vector<long> grid;
        for (long v = cex_lo; v <= cex_hi; ++v) grid.push_back(v);
        rep = finite_residue_counterexample(cex_p, grid);
      } else if (cex_kind == "divisibility") {
        rep = divisibility_counterexample(cex_n, cex_h);
      } else if (cex_kind == "locally-constant") {
        rep = locally_constant_ivt_failure(spec, parse_element(spec, cex_k));
      } else {
        fail(ErrorKind::precondition, "unknown counterexample kind " + cex_kind);
      }
      json r = report_json(rep);
      for (auto& [k, v] : r.items()) out[k] = v;
      emit(out, c.mode);
      return rep.ivt_fails_as_predicted ? 0 : 1;
    } else if (*sfac) {
      RestrictedSeries S = parse_series(spec, ser_src);
      FieldElement a = ser_a.empty() ? FieldElement::one(spec)
                                     : parse_element(spec, ser_a);
      auto [h_a, S_a] = normalize_at(S, a, pi + 8);
      WeierstrassFactorization W = weierstrass_factor(S_a, pi);
      json f = factorization_json(W);
      for (auto& [k, v] : f.items()) out[k] = v;
      out["h_a"] = h_a.to_string();
      emit(out, c.mode);
    } else if (*sivt) {
      RestrictedSeries S = parse_series(spec, ser_src);
      IVTSolution s =
          ivt_series_solve(S, parse_element(spec, ser_a),
                           parse_element(spec, ser_b),
                           parse_group_value(ser_alpha), pi);
      json j = solution_json(s);
      for (auto& [k, v] : j.items()) out[k] = v;
      emit(out, c.mode);
    } else if (*sphi) {
      RestrictedSeries S = parse_series(spec, ser_src);
      GroupValue beta = ser_beta.empty() ? GroupValue(Rat(0))
                                         : parse_group_value(ser_beta);
      out["beta"] = beta.to_string();
      if (!ser_gamma.empty()) {
        GroupValue g = parse_group_value(ser_gamma);
        out["gamma"] = g.to_string();
        out["value"] = phi_series(S, beta, g, pi).to_string();
      }
      if (!ser_sample.empty()) {
        if (c.mode == OutputMode::csv) {
          std::cout << "gamma,phi\n";
          for (const Rat& g : parse_sample_grid(ser_sample))
            std::cout << rat_to_string(g) << ","
                      << phi_series(S, beta, GroupValue(g), pi).to_string()
                      << "\n";
          return 0;
        }
        json samples = json::array();
        for (const Rat& g : parse_sample_grid(ser_sample))
          samples.push_back(
              {{"gamma", rat_to_string(g)},
               {"phi", phi_series(S, beta, GroupValue(g), pi).to_string()}});
        out["samples"] = samples;
      }
      emit(out, c.mode);
    } else if (*szer) {
      RestrictedSeries S = parse_series(spec, ser_src);
      FieldElement a = ser_a.empty() ? FieldElement::one(spec)
                                     : parse_element(spec, ser_a);
      out["zeros"] = slopes_json(zero_valuations_above(S, a, pi));
      emit(out, c.mode);
    }
  } catch (const Error& e) {
    json err = base_report();
    err["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    if (c.mode == OutputMode::json)
      std::cout << err.dump() << "\n";
    else
      std::cerr << e.what() << "\n";
    return error_exit_code(e.kind());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
