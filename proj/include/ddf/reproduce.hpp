#ifndef DDF_REPRODUCE_HPP
#define DDF_REPRODUCE_HPP

// The reproduction suite: every concrete quantity and (non)isomorphism claim,
// each run as one timed check with a pinned runtime bound.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "designs.hpp"
#include "finite_field.hpp"
#include "galois_ring.hpp"
#include "iso.hpp"
#include "properties.hpp"
#include "verification.hpp"

namespace ddf {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckResult {
  int id = 0;
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct ReproduceConfig {
  /// Tags or numeric ids; empty runs everything.
  std::vector<std::string> only;
  /// The property sweep needs designs with up to 810 blocks.
  SearchBudget budget{128, 1024, 2'000'000};
  std::uint64_t seed = 20170;
  unsigned threads = 1;
  unsigned relabelings = 100;
};

struct ReproduceReport {
  std::vector<CheckResult> checks;

  bool any(CheckStatus s) const {
    return std::any_of(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; });
  }
  /// 0 all passed, 5 some check failed, 4 nothing failed but some were skipped
  /// for budget.
  int exit_code() const { return any(CheckStatus::Fail) ? 5 : any(CheckStatus::Skipped) ? 4 : 0; }
};

namespace detail {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CheckSpec {
  int id;
  std::string name;
  std::vector<std::string> tags;
  double limit_seconds;
  std::function<Outcome(const ReproduceConfig&)> run;
};

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

inline std::string show(const IntersectionProfile& prof) {
  std::string s = "{";
  bool first = true;
  for (const auto& [size, count] : prof.histogram) {
    s += (first ? "" : ", ") + std::to_string(size) + ":" + std::to_string(count);
    first = false;
  }
  return s + "}";
}

inline bool has(const std::vector<std::size_t>& xs, std::size_t x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

struct SweepEntry {
  std::string kind;
  std::uint32_t p;
  unsigned a;  // m, n or r
  std::uint32_t e;
};

inline const std::vector<SweepEntry>& sweep() {
  static const std::vector<SweepEntry> entries = {
      {"wilson", 2, 4, 3}, {"wilson", 3, 4, 4}, {"wilson", 2, 4, 5}, {"wilson", 2, 6, 9}, {"wilson", 3, 2, 4},
      {"wilson", 5, 2, 6}, {"momihara", 2, 1, 0}, {"momihara", 3, 1, 0}, {"davis", 2, 2, 0}, {"davis", 2, 3, 0},
      {"davis", 3, 1, 0}, {"davis", 5, 1, 0}, {"davis", 3, 2, 0},
  };
  return entries;
}

inline BlockFamily build(const SweepEntry& s) {
  if (s.kind == "wilson") return wilson_family(s.p, s.a, s.e);
  if (s.kind == "momihara") return momihara_family(s.p, s.a);
  return davis_family(s.p, s.a);
}

inline Outcome check_ddf_lambda(const ReproduceConfig&) {
  Outcome out{true, {}};
  for (const auto& s : sweep()) {
    const BlockFamily fam = build(s);
    const Uniformity u = is_ddf(fam);
    if (!u.holds || u.lambda != fam.k() - 1) {
      out.pass = false;
      out.detail += fam.label + " gave " + (u.holds ? std::to_string(u.lambda) : "non-constant") + "; ";
    }
  }
  if (out.pass) out.detail = std::to_string(sweep().size()) + " families with lambda = k-1";
  return out;
}

inline Outcome check_edf_lambda(const ReproduceConfig&) {
  Outcome out{true, {}};
  for (const auto& s : sweep()) {
    const BlockFamily fam = build(s);
    const Uniformity u = is_edf(fam);
    if (!u.holds || u.lambda != fam.v() - fam.k() - 1) {
      out.pass = false;
      out.detail += fam.label + " gave " + (u.holds ? std::to_string(u.lambda) : "non-constant") + "; ";
    }
  }
  if (out.pass) out.detail = std::to_string(sweep().size()) + " families with lambda_edf = v-k-1";
  return out;
}

inline Outcome check_uniform_cyclotomy(const ReproduceConfig&) {
  struct Case {
    std::uint32_t p;
    unsigned m;
    std::uint32_t e;
  };
  const Case cases[] = {{2, 4, 3}, {2, 4, 5}, {2, 6, 9}, {3, 4, 4}, {3, 4, 10}, {2, 8, 17}, {5, 4, 26}};
  Outcome out{true, {}};
  std::uint64_t compared = 0;
  for (const auto& c : cases) {
    const FieldCtx ctx = make_field(c.p, c.m);
    for (std::uint32_t i = 0; i < c.e; ++i) {
      for (std::uint32_t j = 0; j < c.e; ++j) {
        ++compared;
        const auto direct = static_cast<std::int64_t>(cyclotomic_number(ctx, c.e, i, j));
        const auto closed = uniform_cyclotomic_number(c.p, c.m, c.e, i, j);
        if (direct != closed) {
          out.pass = false;
          out.detail += "q=" + std::to_string(ctx.q()) + " e=" + std::to_string(c.e) + " (" + std::to_string(i) + "," +
                        std::to_string(j) + "): " + std::to_string(direct) + " vs " + std::to_string(closed) + "; ";
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(compared) + " cyclotomic numbers agree";
  return out;
}

inline Outcome check_momihara_three(const ReproduceConfig& cfg) {
  const auto mom = profile_support(develop(momihara_family(3, 1)), cfg.threads);
  const auto wil = profile_support(develop(wilson_family(3, 4, 4)), cfg.threads);
  const std::vector<std::size_t> expected{1, 4, 6};
  const bool pass = has(mom, 5) && wil == expected && !has(expected, 5);
  return {pass, "momihara support " + join(mom) + ", wilson support " + join(wil) + " (expected exactly " +
                    join(expected) + ")"};
}

inline Outcome check_momihara_two(const ReproduceConfig& cfg) {
  const Design mom = develop(momihara_family(2, 1));
  const Design wil = develop(wilson_family(2, 4, 3));
  const auto ms = profile_support(mom, cfg.threads);
  const auto ws = profile_support(wil, cfg.threads);
  const auto aw = automorphism_group_order(wil, cfg.budget);
  const auto am = automorphism_group_order(mom, cfg.budget);
  const bool iso = are_isomorphic(wil, mom, cfg.budget).isomorphic;
  const bool pass = ms == ws && aw == 960 && am == 192 && !iso;
  return {pass, "supports " + join(ws) + " / " + join(ms) + ", |Aut| " + std::to_string(aw) + " / " + std::to_string(am) +
                    (iso ? ", isomorphic" : ", not isomorphic")};
}

inline Outcome check_davis_four(const ReproduceConfig& cfg) {
  const Design dav = develop(davis_family(2, 2));
  const Design wil = develop(wilson_family(2, 4, 5));
  const auto pd = intersection_profile(dav, cfg.threads);
  const auto pw = intersection_profile(wil, cfg.threads);
  IntersectionProfile expected;
  expected.histogram = {{0, 1600}, {1, 1440}, {2, 120}};
  const auto ad = automorphism_group_order(dav, cfg.budget);
  const auto aw = automorphism_group_order(wil, cfg.budget);
  const bool iso = are_isomorphic(dav, wil, cfg.budget).isomorphic;
  const bool pass = pd == expected && pw == expected && ad == 384 && aw == 5760 && !iso;
  return {pass, "profiles " + show(pd) + " / " + show(pw) + ", |Aut| " + std::to_string(ad) + " / " + std::to_string(aw) +
                    (iso ? ", isomorphic" : ", not isomorphic")};
}

inline Outcome check_davis_eight(const ReproduceConfig& cfg) {
  const auto ds = profile_support(develop(davis_family(2, 3)), cfg.threads);
  const auto ws = profile_support(develop(wilson_family(2, 6, 9)), cfg.threads);
  const std::vector<std::size_t> expected{0, 1, 6};
  return {has(ds, 2) && ws == expected, "davis support " + join(ds) + ", wilson support " + join(ws)};
}

inline Outcome check_davis_odd(const ReproduceConfig& cfg) {
  Outcome out{true, {}};
  const std::pair<std::uint32_t, unsigned> cases[] = {{5, 1}, {3, 2}};
  for (const auto& [p, r] : cases) {
    const std::size_t pr = checked_pow(p, r);
    const auto ds = profile_support(develop(davis_family(p, r)), cfg.threads);
    const auto ws = profile_support(develop(wilson_family(p, 2 * r, static_cast<std::uint32_t>(pr + 1))), cfg.threads);
    const bool middle = std::any_of(ds.begin(), ds.end(), [pr](std::size_t n) { return 1 < n && n < pr - 2; });
    const std::vector<std::size_t> expected{0, 1, pr - 2};
    if (!middle || ws != expected) out.pass = false;
    out.detail += "p^r=" + std::to_string(pr) + ": davis " + join(ds) + ", wilson " + join(ws) + "; ";
  }
  return out;
}

/// The nine-point map Z_9 -> Z_3 x Z_3, with (a, b) read as a + b x in GF(9).
inline Permutation transported_nine_point_map(const GroupView& field) {
  const std::pair<std::uint32_t, std::uint32_t> image[9] = {{0, 0}, {0, 1}, {1, 2}, {1, 1}, {2, 2},
                                                            {2, 0}, {1, 0}, {2, 1}, {0, 2}};
  Permutation f(9);
  for (std::uint32_t z = 0; z < 9; ++z) f[z] = field.index_of(image[z].first + 3 * image[z].second);
  return f;
}

inline Outcome check_davis_iso(const ReproduceConfig& cfg) {
  const Design dav = develop(davis_family(3, 1));
  const BlockFamily wf = wilson_family(3, 2, 4);
  const Design wil = develop(wf);
  const IsoVerdict verdict = are_isomorphic(dav, wil, cfg.budget);
  const bool found = verdict.isomorphic && verify_isomorphism(dav, wil, *verdict.bijection);
  // ring index of z in GR(9, 1) = Z_9 is z itself
  const bool explicit_map = verify_isomorphism(dav, wil, transported_nine_point_map(wf.group));
  return {found && explicit_map, std::string("search witness ") + (found ? "valid" : "missing") + ", explicit map " +
                                     (explicit_map ? "valid" : "invalid")};
}

inline Outcome check_teich_rds(const ReproduceConfig&) {
  Outcome out{true, {}};
  for (unsigned r = 2; r <= 4; ++r) {
    const RingCtx ring = make_ring(2, r);
    const GroupView g = GroupView::of_ring(ring);
    ElementSet t, ideal;
    for (const auto x : ring.teichmuller()) t.push_back(x.code);
    for (const auto x : ring.ideal_elements()) ideal.push_back(x.code);
    const RdsReport rep = is_relative_difference_set(g, sorted_set(t), sorted_set(ideal));
    const std::uint64_t q = 1ULL << r;
    if (!rep.holds || rep.m != q || rep.n != q || rep.k != q || rep.lambda != 1) out.pass = false;
    out.detail += "r=" + std::to_string(r) + ": (" + std::to_string(rep.m) + "," + std::to_string(rep.n) + "," +
                  std::to_string(rep.k) + "," + (rep.holds ? std::to_string(rep.lambda) : "-") + "); ";
  }
  return out;
}

inline Outcome check_sum_multiplicities(const ReproduceConfig&) {
  Outcome out{true, {}};
  std::uint64_t blocks = 0;
  for (unsigned r = 2; r <= 3; ++r) {
    const RingCtx ring = make_ring(2, r);
    const GroupView g = GroupView::of_ring(ring);
    for (const auto alpha : ring.teichmuller()) {
      const RingElem lead = ring.add(ring.one(), ring.times_p(alpha));
      ElementSet block;
      for (std::size_t i = 1; i < ring.teichmuller().size(); ++i) block.push_back(ring.mul(lead, ring.teichmuller()[i]).code);
      const DiffMultiset ms = delta_plus_set(g, sorted_set(block));
      ++blocks;
      for (Index x = 1; x < g.order(); ++x) {
        const bool unit = ring.is_unit(RingElem{x});
        if ((unit && ms[x] != 0 && ms[x] != 2) || (!unit && ms[x] != 1)) {
          out.pass = false;
          out.detail += "r=" + std::to_string(r) + " alpha=" + std::to_string(alpha.code) + " element " + std::to_string(x) +
                        " multiplicity " + std::to_string(ms[x]) + "; ";
          break;
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(blocks) + " blocks checked";
  return out;
}

inline Outcome check_property_sweep(const ReproduceConfig& cfg) {
  std::map<std::string, LawReport> laws;
  std::set<std::pair<std::uint32_t, unsigned>> rings;
  for (const auto& s : sweep()) {
    if (s.kind == "davis") rings.insert({s.p, s.a});
    if (s.kind == "momihara") rings.insert({s.p, 2 * s.a});
  }
  for (const auto& [p, r] : rings) {
    const RingCtx ring = make_ring(p, r);
    laws["unit-difference"] += unit_difference_law(ring);
    laws["delta-T* cosets"] += teich_delta_coset_law(ring);
    if (p % 2 == 1) {
      laws["T*=-T*"] += teich_symmetric_law(ring);
      laws["odd multiplicity"] += odd_multiplicity_law(ring);
    }
  }
  for (const auto& s : sweep()) {
    if (s.kind == "momihara") laws["sumset identity"] += momihara_sumset_law(make_ring(s.p, 2 * s.a));
  }
  std::uint64_t seed = cfg.seed;
  for (const auto& s : sweep()) {
    const BlockFamily fam = build(s);
    laws["translation invariance"] += translation_invariance_law(fam);
    laws["certificate invariance"] += certificate_invariance_law(develop(fam), cfg.relabelings, seed++, cfg.budget);
  }
  Outcome out{true, {}};
  for (const auto& [name, rep] : laws) {
    if (!rep.holds) out.pass = false;
    out.detail += name + " " + (rep.holds ? "ok" : "FAILED at " + rep.counterexample) + " (" + std::to_string(rep.cases) +
                  "); ";
  }
  return out;
}

inline const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = {
      {1, "DDF certification", {"ddf", "wilson", "momihara", "davis"}, 10, check_ddf_lambda},
      {2, "EDF bridge", {"edf", "wilson", "momihara", "davis"}, 10, check_edf_lambda},
      {3, "uniform cyclotomy", {"cyclotomy", "wilson"}, 30, check_uniform_cyclotomy},
      {4, "Momihara p^n=3 profiles", {"profile", "momihara", "wilson"}, 60, check_momihara_three},
      {5, "Momihara p^n=2 automorphisms", {"iso", "momihara", "wilson"}, 300, check_momihara_two},
      {6, "Davis p=2 r=2 profiles and automorphisms", {"iso", "profile", "davis", "wilson"}, 300, check_davis_four},
      {7, "Davis p=2 r=3 profiles", {"profile", "davis", "wilson"}, 60, check_davis_eight},
      {8, "Davis odd p profiles", {"profile", "davis", "wilson"}, 60, check_davis_odd},
      {9, "Davis p=3 r=1 isomorphism", {"iso", "davis", "wilson"}, 10, check_davis_iso},
      {10, "Teichmueller relative difference set", {"rds", "davis"}, 10, check_teich_rds},
      {11, "sum multiplicities", {"sums", "davis"}, 10, check_sum_multiplicities},
      {12, "property sweep", {"properties", "iso", "wilson", "momihara", "davis"}, 300, check_property_sweep},
  };
  return specs;
}

inline bool selected(const CheckSpec& spec, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only) {
    if (o == std::to_string(spec.id)) return true;
    if (std::find(spec.tags.begin(), spec.tags.end(), o) != spec.tags.end()) return true;
  }
  return false;
}

}  // namespace detail

inline std::vector<std::string> reproduce_tags() {
  std::set<std::string> tags;
  for (const auto& spec : detail::registry()) tags.insert(spec.tags.begin(), spec.tags.end());
  return {tags.begin(), tags.end()};
}

/// Runs the selected checks in order. `progress` sees each result as it lands.
inline ReproduceReport reproduce(const ReproduceConfig& cfg,
                                 const std::function<void(const CheckResult&)>& progress = {}) {
  ReproduceReport report;
  for (const auto& spec : detail::registry()) {
    if (!detail::selected(spec, cfg.only)) continue;
    CheckResult res;
    res.id = spec.id;
    res.name = spec.name;
    res.limit_seconds = spec.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const detail::Outcome o = spec.run(cfg);
      res.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
      res.detail = o.detail;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      res.status = CheckStatus::Skipped;
      res.detail = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.status == CheckStatus::Pass && res.seconds > res.limit_seconds) {
      res.status = CheckStatus::Fail;
      res.detail += " (over the time bound)";
    }
    if (progress) progress(res);
    report.checks.push_back(std::move(res));
  }
  return report;
}

inline std::string format_line(const CheckResult& r) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.id << ". " << r.name << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << "s / " << r.limit_seconds << "s): " << r.detail;
  return os.str();
}

}  // namespace ddf

#endif  // DDF_REPRODUCE_HPP
