// ddf: construct difference families, develop them into designs and compute
// isomorphism invariants. JSON on stdout (or --out); --format table for humans.
//
// Exit codes: 0 ok, 2 bad parameters, 3 input/output, 4 budget, 5 check failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddf/ddf.hpp"
#include "ddf/serialize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParams = 2;
constexpr int kIo = 3;
constexpr int kBudget = 4;
constexpr int kCheckFailed = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> n, r, m;
  std::optional<std::uint32_t> e;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 20170;
  std::vector<std::string> inputs;
  std::vector<std::string> only;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

ddf::Json read_json(const std::string& path) {
  try {
    return ddf::Json::parse(read_input(path));
  } catch (const ddf::Json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw IoError("cannot write " + opt.out);
  out << text;
}

void emit_json(const Options& opt, const ddf::Json& j) { emit(opt, j.dump(2) + "\n"); }

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw ddf::Error(ddf::ErrorKind::DegenerateParameters, std::string("missing ") + flag);
  return *v;
}

ddf::SearchBudget budget_of(const Options& opt, std::size_t default_blocks) {
  ddf::SearchBudget b;
  b.max_blocks = opt.budget.value_or(default_blocks);
  return b;
}

ddf::BlockFamily build_family(const Options& opt) {
  const auto p = need(opt.p, "--p");
  if (opt.kind == "wilson") return ddf::wilson_family(p, need(opt.m, "--m"), need(opt.e, "--e"));
  if (opt.kind == "momihara") return ddf::momihara_family(p, need(opt.n, "--n"));
  if (opt.kind == "davis") return ddf::davis_family(p, need(opt.r, "--r"));
  throw ddf::Error(ddf::ErrorKind::DegenerateParameters, "unknown construction '" + opt.kind + "'");
}

std::string input_or_stdin(const Options& opt, std::size_t i) { return i < opt.inputs.size() ? opt.inputs[i] : "-"; }

int cmd_construct(const Options& opt) {
  const ddf::BlockFamily fam = build_family(opt);
  if (opt.format == "table") {
    std::ostringstream os;
    os << fam.label << " in " << fam.group.describe() << ": v=" << fam.v() << " k=" << fam.k()
       << " blocks=" << fam.blocks.size() << "\n";
    for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
      os << "D" << i << ":";
      for (const auto x : fam.blocks[i]) os << " " << x;
      os << "\n";
    }
    emit(opt, os.str());
  } else {
    emit_json(opt, ddf::to_json(fam));
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  if (opt.kind == "rds") {
    const auto p = need(opt.p, "--p");
    const auto r = need(opt.r, "--r");
    const ddf::RingCtx ring = ddf::make_ring(p, r);
    const ddf::GroupView g = ddf::GroupView::of_ring(ring);
    ddf::ElementSet t, ideal;
    for (const auto x : ring.teichmuller()) t.push_back(x.code);
    for (const auto x : ring.ideal_elements()) ideal.push_back(x.code);
    const auto rep = ddf::is_relative_difference_set(g, ddf::sorted_set(t), ddf::sorted_set(ideal));
    const ddf::Json params = {{"set", "teichmuller"}, {"forbidden", "maximal ideal"}, {"group", ddf::to_json(g.description())}};
    if (opt.format == "table") {
      emit(opt, std::string("rds: ") + (rep.holds ? "holds" : "fails") + " (" + std::to_string(rep.m) + "," +
                    std::to_string(rep.n) + "," + std::to_string(rep.k) + "," + std::to_string(rep.lambda) + ")\n");
    } else {
      emit_json(opt, ddf::to_json(rep, params));
    }
    return rep.holds ? kOk : kCheckFailed;
  }

  const ddf::BlockFamily fam = ddf::family_from_json(read_json(input_or_stdin(opt, 0)));
  const ddf::Json params = {{"label", fam.label}, {"v", fam.v()}, {"k", fam.k()}, {"blocks", fam.blocks.size()}};
  ddf::Uniformity u;
  if (opt.kind == "ddf") {
    u = ddf::is_ddf(fam);
  } else if (opt.kind == "edf") {
    u = ddf::is_edf(fam);
  } else if (opt.kind == "ds") {
    ddf::ElementSet all;
    for (const auto& b : fam.blocks) all.insert(all.end(), b.begin(), b.end());
    u = ddf::is_difference_set(fam.group, ddf::sorted_set(all));
  } else {
    throw ddf::Error(ddf::ErrorKind::DegenerateParameters, "unknown check '" + opt.kind + "'");
  }
  if (opt.format == "table") {
    emit(opt, opt.kind + " " + fam.label + ": " + (u.holds ? "lambda=" + std::to_string(u.lambda) : "not uniform") + "\n");
  } else {
    emit_json(opt, ddf::to_json(u, opt.kind, params));
  }
  return u.holds ? kOk : kCheckFailed;
}

int cmd_develop(const Options& opt) {
  const ddf::Design d = ddf::develop(ddf::family_from_json(read_json(input_or_stdin(opt, 0))));
  if (opt.format == "table") {
    const auto bal = ddf::verify_2design(d);
    emit(opt, d.origin + ": v=" + std::to_string(d.v) + " k=" + std::to_string(d.k) + " b=" + std::to_string(d.b()) +
                  " lambda=" + (bal.holds ? std::to_string(bal.lambda) : "-") + "\n");
  } else {
    emit_json(opt, ddf::to_json(d));
  }
  return kOk;
}

int cmd_profile(const Options& opt) {
  const ddf::Design d = ddf::design_from_json(read_json(input_or_stdin(opt, 0)));
  const auto prof = ddf::intersection_profile(d, opt.threads);
  if (opt.format == "table") {
    std::ostringstream os;
    os << "size  pairs\n";
    for (const auto& [size, count] : prof.histogram) os << size << "  " << count << "\n";
    emit(opt, os.str());
  } else {
    emit_json(opt, ddf::to_json(prof));
  }
  return kOk;
}

int cmd_rank(const Options& opt) {
  const ddf::Design d = ddf::design_from_json(read_json(input_or_stdin(opt, 0)));
  const auto ell = need(opt.p, "--p");
  const auto rank = ddf::incidence_p_rank(d, ell);
  if (opt.format == "table") {
    emit(opt, "rank over GF(" + std::to_string(ell) + "): " + std::to_string(rank) + "\n");
  } else {
    emit_json(opt, {{"p", ell}, {"rows", d.v}, {"cols", d.b()}, {"rank", rank}});
  }
  return kOk;
}

int cmd_iso(const Options& opt) {
  if (opt.inputs.size() != 2) throw ddf::Error(ddf::ErrorKind::DegenerateParameters, "iso needs two design files");
  const ddf::Design d1 = ddf::design_from_json(read_json(opt.inputs[0]));
  const ddf::Design d2 = ddf::design_from_json(read_json(opt.inputs[1]));
  const auto verdict = ddf::are_isomorphic(d1, d2, budget_of(opt, 512));
  if (opt.format == "table") {
    emit(opt, std::string(verdict.isomorphic ? "isomorphic" : "not isomorphic") + "\n");
  } else {
    emit_json(opt, ddf::to_json(verdict));
  }
  return kOk;
}

int cmd_aut(const Options& opt) {
  const ddf::Design d = ddf::design_from_json(read_json(input_or_stdin(opt, 0)));
  const auto res = ddf::canonical_search(d, budget_of(opt, 512));
  if (opt.format == "table") {
    emit(opt, "|Aut| = " + std::to_string(res.group_order) + "\n");
  } else {
    emit_json(opt, {{"origin", d.origin}, {"v", d.v}, {"b", d.b()}, {"order", res.group_order}});
  }
  return kOk;
}

int cmd_reproduce(const Options& opt) {
  ddf::ReproduceConfig cfg;
  cfg.only = opt.only;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  if (opt.budget) cfg.budget.max_blocks = *opt.budget;
  const bool table = opt.format == "table";
  const auto report = ddf::reproduce(cfg, [&](const ddf::CheckResult& r) {
    if (table && (opt.out.empty() || opt.out == "-")) std::cout << ddf::format_line(r) << std::endl;
  });
  if (table) {
    if (!opt.out.empty() && opt.out != "-") {
      std::string text;
      for (const auto& r : report.checks) text += ddf::format_line(r) + "\n";
      emit(opt, text);
    }
  } else {
    ddf::Json checks = ddf::Json::array();
    for (const auto& r : report.checks)
      checks.push_back({{"id", r.id},
                        {"name", r.name},
                        {"status", ddf::to_string(r.status)},
                        {"detail", r.detail},
                        {"limit_seconds", r.limit_seconds}});
    emit_json(opt, {{"checks", checks}, {"exit_code", report.exit_code()}});
  }
  return report.exit_code();
}

int exit_code_of(ddf::ErrorKind k) {
  switch (k) {
    case ddf::ErrorKind::BudgetExceeded: return kBudget;
    case ddf::ErrorKind::Parse:
    case ddf::ErrorKind::IndexOutOfRange:
    case ddf::ErrorKind::UnequalBlockSizes:
    case ddf::ErrorKind::NotDisjoint:
    case ddf::ErrorKind::NotAPermutation: return kIo;
    default: return kParams;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint difference families, their developments and design invariants"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1U, 256U));
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "prime");
    sub->add_option("--n", opt.n, "Momihara parameter n (ring GR(p^2, 2n))");
    sub->add_option("--r", opt.r, "Galois ring degree");
    sub->add_option("--m", opt.m, "field degree");
    sub->add_option("--e", opt.e, "number of cyclotomic classes");
  };

  auto* construct = app.add_subcommand("construct", "build a difference family");
  construct->add_option("kind", opt.kind, "wilson, momihara or davis")->required()->check(CLI::IsMember({"wilson", "momihara", "davis"}));
  params(construct);
  common(construct);

  auto* verify = app.add_subcommand("verify", "certify a family (ddf, edf, ds) or the Teichmueller rds");
  verify->add_option("--kind", opt.kind, "ddf, edf, ds or rds")->check(CLI::IsMember({"ddf", "edf", "ds", "rds"}));
  verify->add_option("input", opt.inputs, "family JSON (default stdin)");
  params(verify);
  common(verify);
  opt.kind = "ddf";

  auto* develop = app.add_subcommand("develop", "develop a family into a design");
  develop->add_option("input", opt.inputs, "family JSON (default stdin)");
  common(develop);

  auto* profile = app.add_subcommand("profile", "block intersection profile of a design");
  profile->add_option("input", opt.inputs, "design JSON (default stdin)");
  common(profile);

  auto* rank = app.add_subcommand("rank", "incidence matrix rank over GF(p)");
  rank->add_option("input", opt.inputs, "design JSON (default stdin)");
  rank->add_option("--p", opt.p, "prime field of the rank")->required();
  common(rank);

  auto* iso = app.add_subcommand("iso", "isomorphism test of two designs");
  iso->add_option("inputs", opt.inputs, "two design JSON files")->expected(2)->required();
  iso->add_option("--budget", opt.budget, "largest block count searched (default 512)");
  common(iso);

  auto* aut = app.add_subcommand("aut", "automorphism group order of a design");
  aut->add_option("input", opt.inputs, "design JSON (default stdin)");
  aut->add_option("--budget", opt.budget, "largest block count searched (default 512)");
  common(aut);

  auto* reproduce = app.add_subcommand("reproduce", "run the reproduction suite");
  reproduce->add_option("--only", opt.only, "restrict to checks with these tags or ids");
  reproduce->add_option("--budget", opt.budget, "largest block count searched (default 1024)");
  reproduce->add_option("--seed", opt.seed, "seed for the random relabelings");
  common(reproduce);
  opt.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParams;
  }
  if (reproduce->parsed() && reproduce->count("--format") == 0) opt.format = "table";

  try {
    if (construct->parsed()) return cmd_construct(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (develop->parsed()) return cmd_develop(opt);
    if (profile->parsed()) return cmd_profile(opt);
    if (rank->parsed()) return cmd_rank(opt);
    if (iso->parsed()) return cmd_iso(opt);
    if (aut->parsed()) return cmd_aut(opt);
    if (reproduce->parsed()) return cmd_reproduce(opt);
  } catch (const ddf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e.kind());
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ddf::Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kIo;
  }
  return kParams;
}
