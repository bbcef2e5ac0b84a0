#include "biell/json_io.hpp"

#include <charconv>

namespace biell {

json to_json(NumClass d) { return json::array({d.a, d.b}); }

json to_json(const MukaiVector& v) {
  return json{{"r", v.r}, {"c1", to_json(v.c1)}, {"s", v.s}};
}

json surface_record(SurfaceType t) {
  const auto& inv = invariants(t);
  return json{{"type", t.id()},
              {"group_order", inv.group_order},
              {"canonical_order", inv.canonical_order},
              {"lambda", inv.lambda},
              {"multiplicities", inv.multiplicities},
              {"torsion_order", inv.torsion_order},
              {"torsion_structure", inv.torsion_structure}};
}

json to_json(const CoverDescriptor& c) {
  const char* kind = c.kind == CoverKind::canonical     ? "canonical"
                     : c.kind == CoverKind::order_quotient ? "order_quotient"
                                                           : "split";
  json out{{"kind", kind},
           {"degree", c.degree},
           {"pullback_A0", c.pullback_a},
           {"pullback_B0", c.pullback_b}};
  if (c.target)
    out["target_type"] = c.target->id();
  else
    out["target_type"] = "abelian";
  out["pairing_scale"] = c.pairing_scale;
  return out;
}

json to_json(const Wall& w) {
  return json{{"xi", to_json(w.xi)}, {"ample_direction", to_json(w.ample_direction)}};
}

json to_json(const CohomologyVector& h) {
  json out = json::array();
  for (const auto& entry : {h.h0, h.h1, h.h2}) {
    if (entry)
      out.push_back(*entry);
    else
      out.push_back(nullptr);
  }
  return out;
}

json to_json(const WbnReport& rep) {
  json components = json::array();
  for (const auto& comp : rep.components)
    components.push_back(
        json{{"index", comp.index}, {"h", to_json(comp.h)}, {"status", to_string(comp.status)}});
  return json{{"class", to_json(rep.cls)},
              {"type", rep.type.id()},
              {"components", components},
              {"moduli_status", to_string(rep.moduli)},
              {"citation", rep.citation}};
}

json to_json(const NonemptinessVerdict& v) {
  json stable;
  switch (v.stable_nonempty) {
    case Tristate::yes: stable = true; break;
    case Tristate::no: stable = false; break;
    default: stable = "UNKNOWN";
  }
  return json{{"nonempty", v.nonempty}, {"stable_nonempty", stable}, {"reason", v.reason}};
}

json to_json(const UlrichCandidate& c) {
  json out{{"r", c.rank}};
  if (c.k)
    out["k"] = *c.k;
  else
    out["k"] = nullptr;
  out["v"] = to_json(c.v);
  return out;
}

json to_json(const UlrichVerdict& v) {
  json cert = json::array();
  for (const auto& step : v.certificate) {
    json premises = json::array();
    for (const auto& p : step.premises) premises.push_back(json::array({p.r, p.k}));
    cert.push_back(json{{"rule", step.rule},
                        {"cite", step.cite},
                        {"fact", json::array({step.fact.r, step.fact.k, to_string(step.status)})},
                        {"premises", premises}});
  }
  return json{{"status", to_string(v.status)},
              {"assumptions",
               json{{"b_at_least_lambda", v.assumptions.b_at_least_lambda},
                    {"h_primitive", v.assumptions.h_primitive},
                    {"h_generic", v.assumptions.h_generic}}},
              {"certificate", cert}};
}

json to_json(const IrrCertificate& c) {
  return json{{"type", c.type.id()},
              {"D", to_json(c.d)},
              {"v", to_json(c.v)},
              {"checks",
               json{{"D_squared_is_12", c.checks.d_squared_is_12},
                    {"v_isotropic", c.checks.v_isotropic},
                    {"chi_is_3", c.checks.chi_is_3},
                    {"l_v_is_1", c.checks.l_v_is_1},
                    {"D12_primitive", c.checks.d12_primitive},
                    {"h2_vanishes_reason", c.checks.h2_vanishes_reason}}},
              {"degree_bound", c.degree_bound}};
}

json to_json(const IrrResult& r) {
  json out{{"lower", r.lower}, {"upper", r.upper}};
  if (r.value)
    out["value"] = *r.value;
  else
    out["value"] = nullptr;
  out["citations"] = r.citations;
  return out;
}

json to_json(const MinimalityReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json entry{{"D_squared", row.d_squared}, {"s", row.s}, {"feasible", row.feasible}};
    if (row.c2)
      entry["c2"] = *row.c2;
    else
      entry["c2"] = nullptr;
    rows.push_back(entry);
  }
  return json{{"rows", rows},
              {"selected", json{{"D_squared", rep.best_d_squared},
                                {"s", rep.best_s},
                                {"c2", rep.best_c2}}}};
}

namespace {

std::vector<std::int64_t> parse_csv(const std::string& text, std::size_t expected,
                                    const char* what) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty())
      throw std::invalid_argument(std::string("malformed ") + what + " literal: '" + text + "'");
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (values.size() != expected)
    throw std::invalid_argument(std::string("malformed ") + what + " literal: '" + text +
                                "' (expected " + std::to_string(expected) + " integers)");
  return values;
}

}  // namespace

NumClass parse_num_class(const std::string& text) {
  auto v = parse_csv(text, 2, "class");
  return {v[0], v[1]};
}

MukaiVector parse_mukai_vector(const std::string& text) {
  auto v = parse_csv(text, 4, "vector");
  return {v[0], {v[1], v[2]}, v[3]};
}

std::string format_num_class(NumClass d) {
  return std::to_string(d.a) + "," + std::to_string(d.b);
}

std::string format_mukai_vector(const MukaiVector& v) {
  return std::to_string(v.r) + "," + std::to_string(v.c1.a) + "," + std::to_string(v.c1.b) + "," +
         std::to_string(v.s);
}

}  // namespace biell
