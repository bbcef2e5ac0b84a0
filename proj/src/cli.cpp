#include "biell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "biell/irrationality.hpp"
#include "biell/json_io.hpp"
#include "biell/lattice.hpp"
#include "biell/selftest.hpp"
#include "biell/ulrich.hpp"
#include "biell/walls.hpp"
#include "biell/wbn.hpp"

namespace biell {

namespace {

struct Envelope {
  json result;
  std::vector<std::string> citations;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

void flatten(const json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items())
      flatten(child, prefix.empty() ? key : prefix + "." + key, rows);
    return;
  }
  if (value.is_array()) {
    const bool scalar_array = std::all_of(value.begin(), value.end(), [](const json& item) {
      return !item.is_object() && !item.is_array();
    });
    if (scalar_array) {
      rows.emplace_back(prefix, value.dump());
      return;
    }
    std::size_t index = 0;
    for (const auto& child : value) flatten(child, prefix + "[" + std::to_string(index++) + "]", rows);
    return;
  }
  rows.emplace_back(prefix, value.is_string() ? value.get<std::string>() : value.dump());
}

void print_table(std::ostream& out, const Envelope& env) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(env.result, "", rows);
  std::size_t width = 0;
  for (const auto& [key, _] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows)
    out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
  if (!env.citations.empty()) {
    out << "citations:";
    for (const auto& c : env.citations) out << " " << c;
    out << "\n";
  }
  for (const auto& w : env.warnings) out << "warning: " << w << "\n";
}

void emit(std::ostream& out, const Envelope& env, const std::string& format) {
  if (format == "table") {
    print_table(out, env);
    return;
  }
  json wrapped{{"ok", env.exit_code == 0},
               {"result", env.result},
               {"citations", env.citations},
               {"warnings", env.warnings}};
  out << wrapped.dump(2) << "\n";
}

SurfaceType parse_type(int id) { return SurfaceType(id); }  // validates 1..7

CoverDescriptor select_cover(SurfaceType t, const std::string& name) {
  for (const CoverDescriptor& c : intermediate_covers(t)) {
    if (name == "canonical" && c.kind == CoverKind::canonical) return c;
    if (name == "split" && c.kind == CoverKind::split) return c;
    if (name == "quotient-" + std::to_string(c.degree) && c.kind == CoverKind::order_quotient)
      return c;
  }
  throw precondition_error("no cover named '" + name + "' for type " + std::to_string(t.id()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice arithmetic and decision procedures for bielliptic surfaces"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  int type_id = 0;
  std::string v_text, w_text, h_text, class_text, cover_name = "canonical", suite;
  std::int64_t rank = 0, k_index = 0;
  std::int64_t wall_box = 0;
  bool with_certificate = false, with_minimality = false, list_covers = false;

  auto* surface = app.add_subcommand("surface", "Invariants of one family");
  surface->add_option("--type", type_id, "Surface type 1..7")->required();

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a Mukai vector");
  chi_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();

  auto* pair_cmd = app.add_subcommand("pair", "Mukai pairing of two vectors");
  pair_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();
  pair_cmd->add_option("--w", w_text, "Vector r,a,b,s")->required();

  auto* twist_cmd = app.add_subcommand("twist", "Twist a vector by a line bundle class");
  twist_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();
  twist_cmd->add_option("--class", class_text, "Divisor class a,b")->required();

  auto* pullback_cmd = app.add_subcommand("pullback", "Pull a vector back along a cover");
  pullback_cmd->add_option("--type", type_id, "Surface type 1..7")->required();
  pullback_cmd->add_option("--v", v_text, "Vector r,a,b,s");
  pullback_cmd->add_option("--cover", cover_name,
                           "canonical, split, or quotient-<degree> (default canonical)");
  pullback_cmd->add_flag("--list", list_covers, "List the covers of the type");

  auto* wbn_cmd = app.add_subcommand("wbn", "Weak Brill-Noether report for a numerical class");
  wbn_cmd->add_option("--type", type_id, "Surface type 1..7")->required();
  wbn_cmd->add_option("--class", class_text, "Divisor class a,b")->required();

  auto* walls_cmd = app.add_subcommand("walls", "Candidate walls for a Mukai vector");
  walls_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();
  walls_cmd->add_option("--box", wall_box, "Extra cap on wall coefficients");

  auto* generic_cmd = app.add_subcommand("generic", "Check a polarization against the walls");
  generic_cmd->add_option("--H", h_text, "Polarization a,b")->required();
  generic_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();

  auto* components_cmd = app.add_subcommand("components", "Irreducible component count");
  components_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();
  components_cmd->add_option("--type", type_id, "Surface type 1..7")->required();

  auto* nonempty_cmd = app.add_subcommand("nonempty", "Moduli non-emptiness verdict");
  nonempty_cmd->add_option("--v", v_text, "Vector r,a,b,s")->required();
  nonempty_cmd->add_option("--H", h_text, "Polarization a,b")->required();
  nonempty_cmd->add_option("--type", type_id, "Surface type 1..7")->required();

  auto* ulrich_cmd = app.add_subcommand("ulrich", "Ulrich vector enumeration and verdicts");
  ulrich_cmd->require_subcommand(1);
  auto* ulrich_enum = ulrich_cmd->add_subcommand("enumerate", "Candidate vectors of one rank");
  ulrich_enum->add_option("--H", h_text, "Polarization a,b")->required();
  ulrich_enum->add_option("--rank", rank, "Rank >= 1")->required();
  ulrich_enum->add_option("--type", type_id, "Surface type (checks b >= lambda)");
  auto* ulrich_decide = ulrich_cmd->add_subcommand("decide", "Existence verdict for (r, k)");
  ulrich_decide->add_option("--type", type_id, "Surface type 1..7")->required();
  ulrich_decide->add_option("--r", rank, "Rank >= 1")->required();
  ulrich_decide->add_option("--k", k_index, "Index r <= k <= 2r")->required();
  ulrich_decide->add_option("--H", h_text, "Polarization a,b (verifies the hypotheses)");

  auto* irr_cmd = app.add_subcommand("irr", "Degree of irrationality");
  irr_cmd->add_option("--type", type_id, "Surface type 1..7")->required();
  irr_cmd->add_flag("--certificate", with_certificate, "Attach the arithmetic certificate");
  irr_cmd->add_flag("--minimality", with_minimality, "Attach the c2 minimality scan");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
  selftest_cmd->add_option("--suite", suite, "Run a single suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  ulrich_enum->fallthrough();
  ulrich_decide->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Envelope env;
  try {
    if (*surface) {
      env.result = surface_record(parse_type(type_id));
      env.citations = {"surface-classification-invariants"};
    } else if (*chi_cmd) {
      env.result = json{{"chi", chi(parse_mukai_vector(v_text))}};
      env.citations = {"riemann-roch-chi"};
    } else if (*pair_cmd) {
      env.result =
          json{{"pair", mukai_pair(parse_mukai_vector(v_text), parse_mukai_vector(w_text))}};
      env.citations = {"mukai-pairing"};
    } else if (*twist_cmd) {
      env.result =
          json{{"v", to_json(twist(parse_mukai_vector(v_text), parse_num_class(class_text)))}};
      env.citations = {"chern-character-twist"};
    } else if (*pullback_cmd) {
      SurfaceType t = parse_type(type_id);
      if (list_covers) {
        json covers = json::array();
        for (const CoverDescriptor& c : intermediate_covers(t)) covers.push_back(to_json(c));
        env.result = json{{"covers", covers}};
      } else {
        if (v_text.empty()) throw precondition_error("pullback requires --v or --list");
        CoverDescriptor c = select_cover(t, cover_name);
        env.result = json{{"cover", to_json(c)},
                          {"v", to_json(pullback(parse_mukai_vector(v_text), c))}};
      }
      env.citations = {"cover-pullback-rules"};
    } else if (*wbn_cmd) {
      WbnReport rep = wbn(parse_type(type_id), parse_num_class(class_text));
      env.result = to_json(rep);
      env.citations = {"line-bundle-wbn-classification"};
      for (const auto& comp : rep.components)
        if (comp.status == WbnStatus::unknown)
          env.warnings.push_back("component " + std::to_string(comp.index) +
                                 " has undetermined cohomology entries");
    } else if (*walls_cmd) {
      MukaiVector v = parse_mukai_vector(v_text);
      std::optional<std::int64_t> box;
      if (walls_cmd->count("--box")) box = wall_box;
      json list = json::array();
      for (const Wall& w : enumerate_walls(v, box)) list.push_back(to_json(w));
      env.result = json{{"walls", list}};
      env.citations = {"wall-bound-derivation"};
      if (box) env.warnings.push_back("coefficient cap may truncate the wall list");
    } else if (*generic_cmd) {
      env.result = json{{"generic", is_generic(Polarization{parse_num_class(h_text)},
                                               parse_mukai_vector(v_text))}};
      env.citations = {"generic-polarization-definition"};
    } else if (*components_cmd) {
      ComponentCount count = component_count(parse_mukai_vector(v_text), parse_type(type_id));
      env.result = json{{"components", count.count}, {"citation", count.citation}};
      env.citations = {count.citation};
    } else if (*nonempty_cmd) {
      NonemptinessVerdict verdict = moduli_nonempty(
          parse_mukai_vector(v_text), Polarization{parse_num_class(h_text)}, parse_type(type_id));
      env.result = to_json(verdict);
      env.citations = {verdict.reason};
      if (verdict.stable_nonempty == Tristate::unknown)
        env.warnings.push_back("stable non-emptiness undetermined");
    } else if (*ulrich_enum) {
      Polarization h{parse_num_class(h_text)};
      json list = json::array();
      for (const UlrichCandidate& c : enumerate_candidates(h, rank)) list.push_back(to_json(c));
      env.result = json{{"candidates", list}};
      env.citations = {"ulrich-vector-classification"};
      if (ulrich_enum->count("--type")) {
        SurfaceType t = parse_type(type_id);
        if (h.cls.b < invariants(t).lambda)
          env.warnings.push_back("b < lambda_S: existence theorems do not apply");
      }
    } else if (*ulrich_decide) {
      UlrichAssumptions assumptions;
      if (ulrich_decide->count("--H")) {
        Polarization h{parse_num_class(h_text)};
        if (!h.ample()) throw precondition_error("polarization must be ample");
        SurfaceType t = parse_type(type_id);
        if (h.cls.b < invariants(t).lambda)
          throw precondition_error("hypothesis b >= lambda_S violated");
        if (std::gcd(h.cls.a, h.cls.b) != 1)
          throw precondition_error("hypothesis 'H primitive' violated");
        // Candidate walls over-approximate real walls, so lying on one does
        // not refute genericity; it only leaves it uncertified.
        if (!is_generic(h, ulrich_vector(rank, k_index, h)))
          env.warnings.push_back(
              "H lies on a candidate wall for the queried vector; genericity not certified");
      }
      UlrichVerdict verdict = decide(parse_type(type_id), rank, k_index, assumptions);
      env.result = to_json(verdict);
      if (!ulrich_decide->count("--H"))
        env.warnings.push_back("hypotheses assumed; pass --H to verify them");
      if (verdict.status == UlrichStatus::unknown) {
        env.citations = {"no-derivation-found"};
        env.warnings.push_back("no rule chain reaches this index; verdict UNKNOWN");
      } else {
        for (const auto& step : verdict.certificate)
          if (std::find(env.citations.begin(), env.citations.end(), step.cite) ==
              env.citations.end())
            env.citations.push_back(step.cite);
      }
    } else if (*irr_cmd) {
      SurfaceType t = parse_type(type_id);
      IrrResult res = irr(t);
      env.result = to_json(res);
      env.citations = res.citations;
      if (with_certificate) env.result["certificate"] = to_json(build_certificate(t));
      if (with_minimality) env.result["minimality"] = to_json(minimality_check());
    } else if (*selftest_cmd) {
      json list = json::array();
      for (const SuiteResult& s : run_selftests(suite)) {
        list.push_back(json{{"name", s.name},
                            {"checks", s.checks},
                            {"failures", s.failures},
                            {"status", s.passed() ? "PASS" : "FAIL"},
                            {"notes", s.notes}});
        if (!s.passed()) env.exit_code = 1;
      }
      env.result = json{{"suites", list}};
    }
  } catch (const precondition_error& e) {
    Envelope failed;
    failed.exit_code = 1;
    failed.result = json{{"error", e.what()}};
    emit(out, failed, format);
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  emit(out, env, format);
  return env.exit_code;
}

}  // namespace biell
