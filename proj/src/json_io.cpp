#include "hsmult/json_io.hpp"

#include "hsmult/errors.hpp"
#include "hsmult/parse.hpp"

namespace hsmult {

namespace {

const Int kMaxPlain = (Int(1) << 53) - 1;

json require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(std::string("missing field: ") + key);
  return j.at(key);
}

Ambient ambient_from_json(const json& j) {
  auto names = require(j, "ambient");
  if (!names.is_array() || names.empty())
    throw input_error("ambient must be a nonempty array of names");
  std::vector<std::string> v;
  for (const auto& n : names) {
    if (!n.is_string()) throw input_error("ambient entries must be strings");
    v.push_back(n.get<std::string>());
  }
  return Ambient(v);
}

int int_field(const json& j, const char* key) {
  auto v = require(j, key);
  if (!v.is_number_integer())
    throw input_error(std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

json encode_int(const Int& v) {
  if (v <= kMaxPlain && v >= -kMaxPlain)
    return json(static_cast<long long>(v.get_si()));
  return json{{"bigint", v.get_str()}};
}

json encode_rat(const Rat& q) {
  if (q.get_den() == 1) return encode_int(q.get_num());
  return json(to_string(q));
}

Int decode_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_object() && j.contains("bigint") && j.at("bigint").is_string())
    return Int(j.at("bigint").get<std::string>());
  throw input_error("expected an integer or a bigint object");
}

Rat decode_rat(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  return Rat(decode_int(j));
}

IdealPresentation ideal_from_json(const json& j) {
  Ambient ambient = ambient_from_json(j);
  auto gens = require(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw input_error("generators must be a nonempty array");
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    if (!g.is_string()) throw input_error("generators must be strings");
    polys.push_back(parse_polynomial(g.get<std::string>(), ambient));
  }
  return IdealPresentation(ambient, std::move(polys));
}

MonomialIdeal monomial_ideal_from_json(const json& j) {
  int dim = int_field(j, "dimension");
  auto gens = require(j, "generators");
  if (!gens.is_array() || gens.empty())
    throw input_error("generators must be a nonempty array");
  std::vector<std::vector<std::uint32_t>> exps;
  for (const auto& g : gens) {
    if (!g.is_array())
      throw input_error("monomial generators must be exponent arrays");
    std::vector<std::uint32_t> e;
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw input_error("exponents must be nonnegative integers");
      e.push_back(static_cast<std::uint32_t>(x.get<long long>()));
    }
    exps.push_back(std::move(e));
  }
  return MonomialIdeal(dim, std::move(exps));
}

CurveGerm germ_from_json(const json& j) {
  Ambient ambient = ambient_from_json(j);
  int trunc = int_field(j, "truncation");
  if (trunc < 2) throw input_error("truncation must be >= 2");
  auto branches = require(j, "branches");
  if (!branches.is_array() || branches.empty())
    throw input_error("branches must be a nonempty array");
  Ambient t_var(std::vector<std::string>{"t"});
  std::vector<BranchSeries> out;
  for (const auto& br : branches) {
    if (!br.is_array() ||
        static_cast<int>(br.size()) != ambient.size())
      throw input_error("each branch needs one series per ambient variable");
    BranchSeries bs;
    bs.truncation = trunc;
    for (const auto& comp : br) {
      if (!comp.is_string())
        throw input_error("branch components must be strings");
      Polynomial p = parse_polynomial(comp.get<std::string>(), t_var);
      SeriesPoly s;
      s.coeffs.assign(trunc, 0);
      for (const auto& [m, c] : p.terms()) {
        if (m.exp(0) >= static_cast<std::uint32_t>(trunc))
          throw input_error(
              "branch component has a term at or beyond the truncation "
              "order: " + comp.get<std::string>());
        s.coeffs[m.exp(0)] = c;
      }
      bs.components.push_back(std::move(s));
    }
    out.push_back(std::move(bs));
  }
  return CurveGerm(ambient, std::move(out));
}

WeightTuple weights_from_json(const json& j) {
  IdealPresentation I = ideal_from_json(j);
  return WeightTuple(I.ambient, I.generators);
}

LineBundleDatum datum_from_json(const json& j) {
  LineBundleDatum L;
  L.k0 = int_field(j, "k0");
  L.degree = decode_int(require(j, "degree"));
  if (j.contains("base_points")) {
    auto pts = j.at("base_points");
    if (!pts.is_array()) throw input_error("base_points must be an array");
    for (const auto& p : pts) {
      BasePointDatum bp;
      bp.kj = int_field(p, "kj");
      auto seq = require(p, "d_seq");
      if (!seq.is_array()) throw input_error("d_seq must be an array");
      for (const auto& d : seq) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
          throw input_error("d_seq entries must be nonnegative integers");
        bp.d_seq.push_back(d.get<int>());
      }
      L.base_points.push_back(std::move(bp));
    }
  }
  L.validate();
  return L;
}

Semigroup semigroup_from_json(const json& j) {
  auto gaps = require(j, "gaps");
  if (!gaps.is_array()) throw input_error("gaps must be an array");
  std::set<int> g;
  for (const auto& x : gaps) {
    if (!x.is_number_integer() || x.get<long long>() < 1)
      throw input_error("gaps must be positive integers");
    g.insert(x.get<int>());
  }
  return Semigroup(std::move(g));
}

GradedClass chern_from_json(const json& j) {
  int rank = int_field(j, "rank");
  int trunc = int_field(j, "truncation");
  GradedClass generic = GradedClass::generic_chern(rank, trunc);
  auto comps = require(j, "chern");
  if (!comps.is_array())
    throw input_error("chern must be an array of polynomial strings");
  if (static_cast<int>(comps.size()) > trunc)
    throw input_error("more chern components than the truncation");
  std::vector<Polynomial> components;
  components.push_back(Polynomial::constant(generic.symbols, 1));
  for (int k = 1; k <= trunc; ++k) {
    if (k <= static_cast<int>(comps.size())) {
      const auto& entry = comps.at(k - 1);
      if (!entry.is_string())
        throw input_error("chern components must be strings");
      components.push_back(
          parse_polynomial(entry.get<std::string>(), generic.symbols));
    } else {
      components.push_back(Polynomial::zero(generic.symbols));
    }
  }
  return GradedClass(generic.symbols, generic.weights, trunc,
                     std::move(components));
}

IntersectionTable table_from_json(const json& j, const GradedClass& chern) {
  if (!j.is_object()) throw input_error("table must be an object");
  // Canonical keys of all monomials of weighted degree n in the symbols.
  std::set<std::string> valid;
  std::vector<std::uint32_t> exps(chern.symbols.size(), 0);
  auto walk = [&](auto&& self, int var, int remaining) -> void {
    if (var == chern.symbols.size()) {
      if (remaining == 0)
        valid.insert(monomial_key(Monomial(exps), chern.symbols));
      return;
    }
    for (int e = 0; e * chern.weights[var] <= remaining; ++e) {
      exps[var] = e;
      self(self, var + 1, remaining - e * chern.weights[var]);
    }
    exps[var] = 0;
  };
  walk(walk, 0, chern.truncation);
  std::map<std::string, Int> values;
  for (const auto& [key, value] : j.items()) {
    if (!valid.count(key))
      throw input_error("table key is not a degree-" +
                        std::to_string(chern.truncation) + " monomial: " + key);
    values[key] = decode_int(value);
  }
  return IntersectionTable(chern.symbols, chern.weights, chern.truncation,
                           std::move(values));
}

json encode_report(const MultiplicityReport& r) {
  json samples = json::array();
  for (const auto& [t, v] : r.samples)
    samples.push_back(json{{"t", t}, {"colength", encode_int(v)}});
  return json{
      {"value", encode_int(r.value)},
      {"dimension", r.dimension},
      {"orders", r.orders},
      {"base", r.base},
      {"backend", r.backend_used == Backend::monomial ? "monomial" : "general"},
      {"samples", samples},
  };
}

json encode_report(const PolarizationReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back(json{{"d", t.d},
                         {"multinomial", encode_int(t.multinomial)},
                         {"mixed", encode_int(t.mixed_value)},
                         {"power_factor", encode_int(t.power_factor)}});
  return json{
      {"lhs", encode_int(r.lhs)},
      {"rhs", encode_int(r.rhs)},
      {"equal", r.equal},
      {"terms", terms},
      {"lhs_certificate", encode_report(r.lhs_report)},
  };
}

json encode_report(const ReesSharpReport& r) {
  json chain = json::array();
  for (const auto& e : r.chain) chain.push_back(encode_int(e));
  json ineqs = json::array();
  for (std::size_t i = 0; i < r.inequalities.size(); ++i)
    ineqs.push_back(json{{"i", i + 1},
                         {"lhs", encode_int(r.inequalities[i].first)},
                         {"rhs", encode_int(r.inequalities[i].second)},
                         {"holds", r.inequalities[i].first <=
                                       r.inequalities[i].second}});
  return json{{"chain", chain}, {"inequalities", ineqs}, {"pass", r.pass}};
}

json encode_report(const CurveCheckReport& r) {
  return json{
      {"lelong", encode_int(r.lelong)},
      {"hs", encode_int(r.hs)},
      {"equal", r.equal},
      {"branch_orders", r.branch_orders},
      {"hs_certificate", encode_report(r.hs_report)},
  };
}

}  // namespace hsmult
