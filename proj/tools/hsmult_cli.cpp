// Command-line front end. Every subcommand reads JSON inputs, runs one
// calculator, and prints a deterministic JSON report (sorted keys); the
// wall_time_ms field is the only part that varies between identical runs.
//
// Exit codes: 0 success, 2 input validation, 3 budget exhausted, 1 internal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsmult/blowdown.hpp"
#include "hsmult/chern.hpp"
#include "hsmult/curve.hpp"
#include "hsmult/errors.hpp"
#include "hsmult/json_io.hpp"
#include "hsmult/multiplicity.hpp"

namespace {

using namespace hsmult;

// Inputs are file paths; a value that already looks like JSON is taken
// verbatim, which keeps one-off invocations scriptable.
json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw input_error("cannot open input file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
}

// List-valued inputs: tokens are either file paths, comma-separable, or
// inline JSON, which may itself contain commas and is kept whole.
std::vector<std::string> expand_list(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (!a.empty() && (a.front() == '{' || a.front() == '[')) {
      out.push_back(a);
      continue;
    }
    std::stringstream ss(a);
    std::string piece;
    while (std::getline(ss, piece, ','))
      if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

Backend backend_from_string(const std::string& s) {
  if (s == "auto" || s == "automatic") return Backend::automatic;
  if (s == "general") return Backend::general;
  if (s == "monomial") return Backend::monomial;
  throw input_error("unknown backend: " + s +
                    " (expected auto, general, or monomial)");
}

struct CommonOpts {
  std::string backend = "auto";
  long budget = 0;  // 0 keeps the default pair-reduction budget

  Budget make_budget() const {
    Budget b;
    if (budget > 0) b.max_pair_reductions = budget;
    return b;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--backend", opts.backend,
                  "colength backend: auto, general, or monomial");
  cmd->add_option("--budget", opts.budget, "pair-reduction budget");
}

std::optional<IdealPresentation> optional_ideal(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return ideal_from_json(load_json(path));
}

json run_hs(const std::string& ideal, const std::string& quotient, int dim,
            const CommonOpts& opts) {
  auto U = ideal_from_json(load_json(ideal));
  std::optional<int> d;
  if (dim > 0) d = dim;
  auto rep = hs_multiplicity(U, optional_ideal(quotient), d,
                             backend_from_string(opts.backend),
                             opts.make_budget());
  return json{{"value", encode_int(rep.value)},
              {"certificate", encode_report(rep)}};
}

json run_mixed(const std::vector<std::string>& ideals,
               const std::vector<int>& degrees, const std::string& quotient,
               const CommonOpts& opts) {
  std::vector<IdealPresentation> U;
  for (const auto& path : ideals) U.push_back(ideal_from_json(load_json(path)));
  auto rep = mixed_multiplicity(U, degrees, optional_ideal(quotient),
                                backend_from_string(opts.backend),
                                opts.make_budget());
  return json{{"value", encode_int(rep.value)},
              {"certificate", encode_report(rep)}};
}

json run_polarization(const std::vector<std::string>& ideals,
                      const std::vector<int>& powers, const CommonOpts& opts) {
  std::vector<IdealPresentation> U;
  for (const auto& path : ideals) U.push_back(ideal_from_json(load_json(path)));
  auto rep = polarization_check(U, powers, backend_from_string(opts.backend),
                                opts.make_budget());
  return encode_report(rep);
}

json run_rees_sharp(const std::vector<std::string>& ideals, int n,
                    const std::string& quotient, const CommonOpts& opts) {
  if (ideals.size() != 2)
    throw input_error("rees-sharp takes exactly two ideals");
  auto U = ideal_from_json(load_json(ideals[0]));
  auto V = ideal_from_json(load_json(ideals[1]));
  auto rep = rees_sharp_check(U, V, n, optional_ideal(quotient),
                              backend_from_string(opts.backend),
                              opts.make_budget());
  return encode_report(rep);
}

json run_newton2d(const std::string& ideal) {
  auto I = monomial_ideal_from_json(load_json(ideal));
  auto hull = newton_hull_2d(I);
  json vertices = json::array();
  for (const auto& v : hull) vertices.push_back(json::array({v[0], v[1]}));
  return json{{"value", encode_int(newton_multiplicity_2d(I))},
              {"certificate", json{{"hull", vertices}}}};
}

json run_staircase(const std::string& ideal) {
  auto I = monomial_ideal_from_json(load_json(ideal));
  json gens = json::array();
  for (const auto& g : I.generators) gens.push_back(g);
  return json{{"value", encode_int(staircase_colength(I))},
              {"certificate", json{{"minimal_generators", gens}}}};
}

json run_curve_lelong(const std::string& germ, const std::string& weights) {
  auto Y = germ_from_json(load_json(germ));
  auto g = weights_from_json(load_json(weights));
  json orders = json::array();
  for (const auto& branch : Y.branches)
    orders.push_back(pullback_order(g, branch));
  return json{{"value", encode_int(curve_lelong_number(Y, g))},
              {"certificate", json{{"branch_orders", orders}}}};
}

json run_verify_curve(const std::string& germ, const std::string& quotient,
                      const std::string& ideal, const CommonOpts& opts) {
  auto Y = germ_from_json(load_json(germ));
  auto J = ideal_from_json(load_json(quotient));
  auto U = ideal_from_json(load_json(ideal));
  auto rep = verify_curve_multiplicity(Y, J, U, opts.make_budget());
  return encode_report(rep);
}

json run_blowdown(const std::string& datum) {
  auto L = datum_from_json(load_json(datum));
  json lambdas = json::array();
  Int base = Int(L.k0) * L.k0 * L.degree;
  for (const auto& bp : L.base_points)
    lambdas.push_back(json{{"kj", bp.kj},
                           {"lambda", encode_int(lambda_multiplicity(bp, L.k0))}});
  return json{{"value", encode_int(rs_blowdown_multiplicity(L))},
              {"certificate",
               json{{"k0", L.k0},
                    {"degree", encode_int(L.degree)},
                    {"base_term", encode_int(base)},
                    {"lambdas", lambdas}}}};
}

json run_semigroup(const std::vector<int>& gaps) {
  Semigroup S(std::set<int>(gaps.begin(), gaps.end()));
  int kappa = first_nongap(S);
  auto L = point_bundle_datum(S);
  json cert{{"kappa", kappa}};
  if (auto bp = dseq_from_semigroup(S)) {
    cert["d_seq"] = bp->d_seq;
    cert["kj"] = bp->kj;
  }
  return json{{"first_nongap", kappa},
              {"value", encode_int(rs_blowdown_multiplicity(L))},
              {"certificate", cert}};
}

BoundsInput bounds_input(int k0, int k1, int p, int n, const std::string& vol,
                         const std::string& volB) {
  BoundsInput b;
  b.k0 = k0;
  b.k1 = k1;
  b.p = p;
  b.n = n;
  b.vol = rat_from_string(vol);
  b.vol_B = rat_from_string(volB);
  b.validate();
  return b;
}

json run_bounds(const BoundsInput& b) {
  auto [lower, upper] = mult_bounds(b);
  return json{{"lower", encode_rat(lower)}, {"upper", encode_rat(upper)}};
}

json run_vol_control(const BoundsInput& b) {
  auto rep = vol_control_check(b);
  return json{{"bound", encode_rat(rep.bound)},
              {"slack", encode_rat(rep.slack)},
              {"pass", rep.pass}};
}

json run_segre(const std::string& chern, const std::string& table) {
  auto c = chern_from_json(load_json(chern));
  auto tab = table_from_json(load_json(table), c);
  auto top = segre_from_chern(dual_class(c)).components[c.truncation];
  return json{{"value", encode_int(top_segre_integral(c, tab))},
              {"certificate", json{{"dual_segre_top", top.to_string()}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicity calculators with JSON reports"};
  app.require_subcommand(1);

  bool pretty = false;
  bool json_out = true;
  app.add_flag("--pretty", pretty, "indent the report");
  app.add_flag("--json", json_out, "JSON report on stdout (default)");

  CommonOpts opts;
  std::string ideal, quotient, germ, weights, datum, chern, table;
  std::vector<std::string> ideals;
  std::vector<int> degrees, powers, gaps;
  int dim = 0, n = 0, k0 = 1, k1 = 1, p = 1, nvars = 1;
  std::string vol = "1", volB = "0";

  auto* hs = app.add_subcommand("hs", "Hilbert-Samuel multiplicity");
  hs->add_option("--ideal", ideal, "ideal JSON")->required();
  hs->add_option("--quotient", quotient, "quotient ideal JSON");
  hs->add_option("--dim", dim, "ring dimension (inferred when omitted)");
  add_common(hs, opts);

  auto* mixed = app.add_subcommand("mixed", "mixed multiplicity");
  mixed->add_option("--ideals", ideals, "ideal JSON, one per factor")
      ->required();
  mixed->add_option("--degrees", degrees, "difference orders d1,d2,...")
      ->required()
      ->delimiter(',');
  mixed->add_option("--quotient", quotient, "quotient ideal JSON");
  add_common(mixed, opts);

  auto* pol = app.add_subcommand("polarization",
                                 "multinomial expansion of e(U1^p1...Un^pn)");
  pol->add_option("--ideals", ideals, "n ideals")->required();
  pol->add_option("--powers", powers, "p1,...,pn")->required()->delimiter(',');
  add_common(pol, opts);

  auto* rees = app.add_subcommand("rees-sharp",
                                  "log-convexity of the mixed chain");
  rees->add_option("--ideals", ideals, "the pair U,V")->required();
  rees->add_option("--n", n, "ring dimension")->required();
  rees->add_option("--quotient", quotient, "quotient ideal JSON");
  add_common(rees, opts);

  auto* newton = app.add_subcommand("newton2d",
                                    "Newton polygon multiplicity, 2 variables");
  newton->add_option("--ideal", ideal, "monomial ideal JSON")->required();

  auto* stair = app.add_subcommand("staircase", "standard monomial count");
  stair->add_option("--ideal", ideal, "monomial ideal JSON")->required();

  auto* lelong = app.add_subcommand("curve-lelong",
                                    "Lelong number of a curve germ");
  lelong->add_option("--germ", germ, "curve germ JSON")->required();
  lelong->add_option("--weights", weights, "weight tuple JSON")->required();

  auto* verify = app.add_subcommand(
      "verify-curve", "Lelong number against Hilbert-Samuel, n = 1");
  verify->add_option("--germ", germ, "curve germ JSON")->required();
  verify->add_option("--quotient", quotient, "curve ideal JSON")->required();
  verify->add_option("--ideal", ideal, "weight ideal JSON")->required();
  add_common(verify, opts);

  auto* blow = app.add_subcommand("blowdown", "blow-down multiplicity");
  blow->add_option("--datum", datum, "line bundle datum JSON")->required();

  auto* semi = app.add_subcommand(
      "semigroup", "point bundle multiplicity from a gap sequence");
  semi->add_option("--gaps", gaps, "gap list, e.g. 1,2,3")->delimiter(',');

  auto* bounds = app.add_subcommand("bounds", "two-sided multiplicity bounds");
  auto* volctl = app.add_subcommand("vol-control",
                                    "base-locus volume upper bound");
  for (auto* cmd : {bounds, volctl}) {
    cmd->add_option("--k0", k0, "least power with a section")->required();
    cmd->add_option("--k1", k1, "generation power")->required();
    cmd->add_option("--p", p, "base locus codimension")->required();
    cmd->add_option("--n", nvars, "base dimension")->required();
    cmd->add_option("--vol", vol, "volume, rational")->required();
    cmd->add_option("--volB", volB, "base-locus volume, rational")->required();
  }

  auto* segre = app.add_subcommand("segre", "top Segre integral of the dual");
  segre->add_option("--chern", chern, "Chern class JSON")->required();
  segre->add_option("--table", table, "intersection table JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    json report;
    if (hs->parsed()) report = run_hs(ideal, quotient, dim, opts);
    else if (mixed->parsed())
      report = run_mixed(expand_list(ideals), degrees, quotient, opts);
    else if (pol->parsed())
      report = run_polarization(expand_list(ideals), powers, opts);
    else if (rees->parsed())
      report = run_rees_sharp(expand_list(ideals), n, quotient, opts);
    else if (newton->parsed()) report = run_newton2d(ideal);
    else if (stair->parsed()) report = run_staircase(ideal);
    else if (lelong->parsed()) report = run_curve_lelong(germ, weights);
    else if (verify->parsed()) report = run_verify_curve(germ, quotient, ideal, opts);
    else if (blow->parsed()) report = run_blowdown(datum);
    else if (semi->parsed()) report = run_semigroup(gaps);
    else if (bounds->parsed())
      report = run_bounds(bounds_input(k0, k1, p, nvars, vol, volB));
    else if (volctl->parsed())
      report = run_vol_control(bounds_input(k0, k1, p, nvars, vol, volB));
    else if (segre->parsed()) report = run_segre(chern, table);

    report["command"] = app.get_subcommands().front()->get_name();
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cout << report.dump(pretty ? 2 : -1) << "\n";
    return 0;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
