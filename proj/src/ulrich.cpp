#include "biell/ulrich.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace biell {

namespace {

constexpr const char* kCiteB1 = "ulrich-line-bundles-and-direct-sums";
constexpr const char* kCiteB2 = "no-ulrich-line-bundles-on-torsion-free-types";
constexpr const char* kCiteB3 = "stable-rank-2-diagonal-vector";
constexpr const char* kCiteB4 = "pushforward-from-intermediate-cover";
constexpr const char* kCiteB5 = "isotropic-divisible-jordan-holder-obstruction";
constexpr const char* kCiteC1 = "ulrich-duality";
constexpr const char* kCiteC2 = "direct-sum-of-ulrich-bundles";

bool torsion_type(int id) { return id == 1 || id == 2 || id == 3 || id == 5; }

bool in_range(FactKey f) { return f.r >= 1 && f.k >= f.r && f.k <= 2 * f.r; }

// EXISTS base facts from cover pushforwards, per type.
std::vector<FactKey> pushforward_facts(int id) {
  switch (id) {
    case 4: return {{2, 2}, {3, 4}};
    case 6: return {{3, 3}};
    case 7: return {{2, 2}, {3, 3}};
    default: return {};
  }
}

// NOT_EXISTS base facts, per type.
std::vector<FactKey> obstruction_facts(int id) {
  switch (id) {
    case 4: return {{3, 3}};
    case 6: return {{2, 2}};
    default: return {};
  }
}

struct Inserter {
  FactTable& table;
  bool changed = false;

  bool add(FactKey key, UlrichStatus status, const char* rule, const char* cite,
           std::vector<FactKey> premises) {
    if (!in_range(key) || key.r > table.max_rank) return false;
    auto it = table.facts.find(key);
    if (it != table.facts.end()) {
      if (it->second.status != status)
        throw std::logic_error("contradictory derivation for (" + std::to_string(key.r) + "," +
                               std::to_string(key.k) + ")");
      return false;
    }
    table.facts.emplace(key, CertificateStep{rule, cite, key, status, std::move(premises)});
    changed = true;
    return true;
  }
};

}  // namespace

const char* to_string(UlrichStatus s) {
  switch (s) {
    case UlrichStatus::exists: return "EXISTS";
    case UlrichStatus::not_exists: return "NOT_EXISTS";
    default: return "UNKNOWN";
  }
}

MukaiVector ulrich_vector(std::int64_t r, std::int64_t k, const Polarization& h) {
  if (r < 1) throw precondition_error("Ulrich vector requires rank >= 1");
  if (k < r || k > 2 * r) throw precondition_error("Ulrich index k must satisfy r <= k <= 2r");
  const std::int64_t a = h.cls.a, b = h.cls.b;
  return {r, {k * a, (3 * r - k) * b}, 2 * r * a * b};
}

std::vector<UlrichCandidate> enumerate_candidates(const Polarization& h, std::int64_t r) {
  if (!h.ample()) throw precondition_error("candidate enumeration requires an ample polarization");
  if (r < 1) throw precondition_error("candidate enumeration requires rank >= 1");
  if (std::gcd(h.cls.a, h.cls.b) != 1) return enumerate_candidates_divisible(h, r);

  std::vector<UlrichCandidate> out;
  for (std::int64_t k = r; k <= 2 * r; ++k) out.push_back({r, k, ulrich_vector(r, k, h)});
  return out;
}

std::vector<UlrichCandidate> enumerate_candidates_divisible(const Polarization& h, std::int64_t r) {
  if (!h.ample()) throw precondition_error("candidate enumeration requires an ample polarization");
  if (r < 1) throw precondition_error("candidate enumeration requires rank >= 1");
  const std::int64_t a = h.cls.a, b = h.cls.b;
  const std::int64_t g = std::gcd(a, b);

  // Lattice points on {x*b + y*a = r*a*b} with x, y >= 0: start at (0, r*b)
  // and step by (a/g, -b/g). The result is the e^H twist of (r, (x,y), 0).
  std::vector<UlrichCandidate> out;
  for (std::int64_t t = 0; t <= r * g; ++t) {
    const NumClass point{t * (a / g), r * b - t * (b / g)};
    MukaiVector v = twist({r, point, 0}, h.cls);
    std::optional<std::int64_t> k;
    if (t % g == 0) k = r + t / g;
    out.push_back({r, k, v});
  }
  return out;
}

FactTable saturate(SurfaceType t, std::int64_t max_rank, const SaturationOptions& opts) {
  if (max_rank < 1) throw precondition_error("saturation requires max rank >= 1");
  FactTable table{t.id(), max_rank, {}};
  Inserter ins{table};
  const int id = t.id();

  if (torsion_type(id)) {
    // Every index is realized by sums of the two Ulrich line bundles.
    for (std::int64_t r = 1; r <= max_rank; ++r)
      for (std::int64_t k = r; k <= 2 * r; ++k)
        ins.add({r, k}, UlrichStatus::exists, "B1", kCiteB1, {});
    return table;
  }

  ins.add({1, 1}, UlrichStatus::not_exists, "B2", kCiteB2, {});
  ins.add({1, 2}, UlrichStatus::not_exists, "B2", kCiteB2, {});
  ins.add({2, 3}, UlrichStatus::exists, "B3", kCiteB3, {});
  for (FactKey f : pushforward_facts(id)) ins.add(f, UlrichStatus::exists, "B4", kCiteB4, {});
  for (FactKey f : obstruction_facts(id)) ins.add(f, UlrichStatus::not_exists, "B5", kCiteB5, {});

  std::mt19937 rng(opts.shuffle_seed.value_or(0));
  do {
    ins.changed = false;
    std::vector<std::pair<FactKey, UlrichStatus>> snapshot;
    snapshot.reserve(table.facts.size());
    for (const auto& [key, step] : table.facts) snapshot.emplace_back(key, step.status);
    if (opts.shuffle_seed) std::shuffle(snapshot.begin(), snapshot.end(), rng);

    // C1: the dual index 3r - k carries the same status.
    for (const auto& [key, status] : snapshot)
      ins.add({key.r, 3 * key.r - key.k}, status, "C1", kCiteC1, {key});

    // C2: sums of existing vectors exist. Never applied to NOT_EXISTS facts.
    for (const auto& [k1, s1] : snapshot) {
      if (s1 != UlrichStatus::exists) continue;
      for (const auto& [k2, s2] : snapshot) {
        if (s2 != UlrichStatus::exists) continue;
        ins.add({k1.r + k2.r, k1.k + k2.k}, UlrichStatus::exists, "C2", kCiteC2, {k1, k2});
      }
    }
  } while (ins.changed);
  return table;
}

namespace {

// Flattens the derivation DAG below `target` to topological order.
std::vector<CertificateStep> flatten(const FactTable& table, FactKey target) {
  std::vector<CertificateStep> out;
  std::set<FactKey> emitted;
  std::vector<std::pair<FactKey, bool>> stack{{target, false}};
  while (!stack.empty()) {
    auto [key, expanded] = stack.back();
    stack.pop_back();
    if (emitted.count(key)) continue;
    const CertificateStep& step = table.facts.at(key);
    if (expanded) {
      emitted.insert(key);
      out.push_back(step);
      continue;
    }
    stack.emplace_back(key, true);
    for (FactKey p : step.premises) stack.emplace_back(p, false);
  }
  return out;
}

bool is_base_fact(int type_id, const CertificateStep& step) {
  const FactKey f = step.fact;
  if (step.rule == "B1")
    return torsion_type(type_id) && step.status == UlrichStatus::exists;
  if (step.rule == "B2")
    return !torsion_type(type_id) && f.r == 1 && step.status == UlrichStatus::not_exists;
  if (step.rule == "B3")
    return f.r == 2 && f.k == 3 && step.status == UlrichStatus::exists;
  if (step.rule == "B4") {
    auto base = pushforward_facts(type_id);
    return std::find(base.begin(), base.end(), f) != base.end() &&
           step.status == UlrichStatus::exists;
  }
  if (step.rule == "B5") {
    auto base = obstruction_facts(type_id);
    return std::find(base.begin(), base.end(), f) != base.end() &&
           step.status == UlrichStatus::not_exists;
  }
  return false;
}

}  // namespace

UlrichVerdict decide(SurfaceType t, std::int64_t r, std::int64_t k,
                     const UlrichAssumptions& assumptions) {
  if (r < 1) throw precondition_error("decide requires rank >= 1");
  if (k < r || k > 2 * r) throw precondition_error("decide requires r <= k <= 2r");
  if (!assumptions.b_at_least_lambda || !assumptions.h_primitive || !assumptions.h_generic)
    throw precondition_error(
        "verdicts require the hypotheses b >= lambda_S, H primitive and H generic");

  FactTable table = saturate(t, r);
  UlrichVerdict verdict;
  verdict.assumptions = assumptions;
  auto it = table.facts.find({r, k});
  if (it == table.facts.end()) {
    verdict.status = UlrichStatus::unknown;
    return verdict;
  }
  verdict.status = it->second.status;
  verdict.certificate = flatten(table, {r, k});
  return verdict;
}

bool replay(const UlrichVerdict& verdict, SurfaceType t, std::int64_t r, std::int64_t k) {
  if (verdict.status == UlrichStatus::unknown) {
    if (!verdict.certificate.empty()) return false;
    FactTable table = saturate(t, std::max<std::int64_t>(r, 1));
    return table.facts.find({r, k}) == table.facts.end();
  }

  std::map<FactKey, UlrichStatus> derived;
  for (const CertificateStep& step : verdict.certificate) {
    if (!in_range(step.fact)) return false;
    bool ok = false;
    if (step.rule == "C1") {
      ok = step.premises.size() == 1;
      if (ok) {
        auto it = derived.find(step.premises[0]);
        ok = it != derived.end() && it->second == step.status &&
             step.fact.r == step.premises[0].r &&
             step.fact.k == 3 * step.premises[0].r - step.premises[0].k;
      }
    } else if (step.rule == "C2") {
      ok = step.premises.size() == 2 && step.status == UlrichStatus::exists;
      if (ok) {
        auto it1 = derived.find(step.premises[0]);
        auto it2 = derived.find(step.premises[1]);
        ok = it1 != derived.end() && it2 != derived.end() &&
             it1->second == UlrichStatus::exists && it2->second == UlrichStatus::exists &&
             step.fact.r == step.premises[0].r + step.premises[1].r &&
             step.fact.k == step.premises[0].k + step.premises[1].k;
      }
    } else {
      ok = step.premises.empty() && is_base_fact(t.id(), step);
    }
    if (!ok) return false;
    derived[step.fact] = step.status;
  }

  auto it = derived.find({r, k});
  return it != derived.end() && it->second == verdict.status;
}

UlrichCandidate every_rank_witness(SurfaceType t, std::int64_t r, const Polarization& h) {
  if (r < 2) throw precondition_error("every-rank witnesses are defined for rank >= 2");
  FactTable table = saturate(t, r);
  for (std::int64_t k = r; k <= 2 * r; ++k) {
    auto it = table.facts.find({r, k});
    if (it != table.facts.end() && it->second.status == UlrichStatus::exists)
      return {r, k, ulrich_vector(r, k, h)};
  }
  throw std::logic_error("no witness derivable at rank " + std::to_string(r) +
                         " for type " + std::to_string(t.id()));
}

}  // namespace biell
