#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdp/blowdown.hpp"
#include "wdp/count.hpp"
#include "wdp/io.hpp"
#include "wdp/oracle.hpp"
#include "wdp/planeconf.hpp"
#include "wdp/synth4.hpp"
#include "wdp/zeta.hpp"

namespace fs = std::filesystem;
using namespace wdp;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int degree = 0;
  std::string type;
  std::string q = "3";
  std::uint64_t seed = 1;
  int nmax = 4;
  std::string format = "json";
  std::string out;
  std::string pair;
  bool all = false;
};

std::pair<int, int> field_of(const std::string& q) {
  try {
    return gf::parse_q(q);
  } catch (const std::exception& e) {
    throw UsageError("--q: " + std::string(e.what()));
  }
}

const types::ArithmeticType& type_of(int degree, const std::string& name) {
  try {
    const auto& T = types::type_table(degree);
    if (degree == 4 && !name.empty() && name[0] == 'O') return T.ordinary(std::stoi(name.substr(1)));
    size_t used = 0;
    int k = std::stoi(name, &used);
    if (used != name.size()) throw std::invalid_argument(name);
    return T.by_number(k);
  } catch (const std::exception&) {
    throw UsageError("--type: no degree-" + std::to_string(degree) + " type '" + name + "'");
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

void want_json(const Options& o) {
  if (o.format != "json") throw UsageError("this subcommand only emits json");
}

int cmd_enumerate(const Options& o) {
  if (o.degree < 3 || o.degree > 6) throw UsageError("--degree must be 3..6");
  emit(o, o.format == "csv" ? io::types_csv(o.degree) : io::types_json(o.degree));
  return kOk;
}

int cmd_zeta(const Options& o) {
  auto [p, m] = field_of(o.q);
  const auto& at = type_of(o.degree, o.type);
  long long q = gf::field(p, m).q;
  if (o.format == "csv") {
    std::ostringstream s;
    s << "n,counts_weak,counts_sing\n";
    for (int n = 1; n <= o.nmax; ++n)
      s << n << "," << zeta::count_weak(at, q, n) << "," << zeta::count_sing(at, q, n) << "\n";
    emit(o, s.str());
  } else {
    emit(o, io::zeta_json(at, q, o.nmax));
  }
  return kOk;
}

int cmd_synthesize(const Options& o) {
  want_json(o);
  if (o.degree != 4) throw UsageError("synthesize is for --degree 4");
  auto [p, m] = field_of(o.q);
  if (p == 2) throw UsageError("synthesize needs odd characteristic");
  const auto& K = gf::field(p, m);
  if (!o.all) {
    const auto& at = type_of(4, o.type);
    try {
      emit(o, io::synth_json(at, synth4::synthesize(at, K, o.seed)));
    } catch (const synth4::NotRealizable& e) {
      std::cerr << "not realizable: " << e.what() << "\n";
      return kFail;
    }
    return kOk;
  }
  if (o.out.empty()) throw UsageError("--all needs --out DIR");
  fs::create_directories(o.out);
  nlohmann::ordered_json manifest;
  manifest["q"] = {{"p", p}, {"m", m}};
  manifest["seed"] = o.seed;
  manifest["files"] = nlohmann::ordered_json::array();
  for (auto* at : types::type_table(4).numbered()) {
    auto r = synth4::synthesize(*at, K, o.seed);
    char name[32];
    std::snprintf(name, sizeof name, "type_%02d.json", at->type_no);
    std::ofstream(fs::path(o.out) / name, std::ios::binary) << io::synth_json(*at, r);
    manifest["files"].push_back({{"type", at->type_no}, {"file", name}, {"method", r.method}});
  }
  std::ofstream(fs::path(o.out) / "manifest.json", std::ios::binary) << manifest.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  want_json(o);
  if (o.degree != 4) throw UsageError("verify is for --degree 4");
  std::ifstream f(o.pair, std::ios::binary);
  if (!f) throw UsageError("--pair: cannot read " + o.pair);
  std::stringstream buf;
  buf << f.rdbuf();
  // accept a bare pair or the output of synthesize
  std::string text = buf.str();
  quad::Pair P;
  try {
    auto j = nlohmann::json::parse(text);
    P = io::parse_pair(j.contains("pair") ? j["pair"].dump() : text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--pair: ") + e.what());
  }
  const auto& at = type_of(4, o.type);
  if (o.nmax < 1 || o.nmax > 6) throw UsageError("--nmax must be 1..6");
  try {
    auto rep = count::verify(P, at, o.nmax);
    emit(o, io::report_json(rep));
    return rep.pass() ? kOk : kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  }
}

int cmd_blowup_plan(const Options& o) {
  want_json(o);
  auto [p, m] = field_of(o.q);
  if (o.degree == 5 || o.degree == 6) {
    type_of(o.degree, o.type);
    emit(o, io::plan_json(plane::build_plan(o.degree, std::stoi(o.type), p, m, o.seed)));
    return kOk;
  }
  if (o.degree == 3) {
    if (p == 2) throw UsageError("degree-3 plans need odd characteristic");
    auto r = blowdown::realizability(type_of(3, o.type).type_no, p, m, o.seed);
    if (!r.plan) {
      std::cerr << "no plan: " << r.certificate << "\n";
      return kFail;
    }
    emit(o, io::plan_json(*r.plan));
    return kOk;
  }
  throw UsageError("--degree must be 3, 5 or 6");
}

int cmd_deg3_table(const Options& o) {
  emit(o, o.format == "csv" ? io::table1_csv() : io::table1_json());
  return kOk;
}

int cmd_realize(const Options& o) {
  want_json(o);
  if (o.degree != 3) throw UsageError("realize is for --degree 3");
  auto [p, m] = field_of(o.q);
  if (p == 2) throw UsageError("realize needs odd characteristic");
  auto r = blowdown::realizability(type_of(3, o.type).type_no, p, m, o.seed);
  emit(o, io::realization_json(r));
  return r.status == blowdown::Status::Plan || r.status == blowdown::Status::OutOfScope ? kOk : kFail;
}

int cmd_selftest(const Options& o) {
  std::vector<int> all;
  for (int t = 1; t <= 58; ++t) all.push_back(t);
  std::vector<oracle::Check> checks = {
      oracle::counters(30, {3, 5, 9, 25, 27}, o.seed),
      oracle::discriminants(200, {3, 5, 7, 9}, o.seed),
      oracle::off_curve(all, {3, 5}, o.seed),
      oracle::brute_counts(all, {3}, o.seed),
  };
  oracle::Check ident{"identify(representative) == type", 0, 0, {}};
  for (int d = 3; d <= 6; ++d) {
    const auto& T = types::type_table(d);
    for (auto* at : T.numbered()) {
      ++ident.instances;
      const auto& gt = T.geo[at->geo];
      if (&types::identify(d, pic::weyl_group(d).elems[at->rep], gt.basis_vecs) != at)
        ident.fail("degree " + std::to_string(d) + " type " + at->name());
    }
  }
  checks.push_back(ident);
  bool ok = true;
  for (auto& c : checks) {
    std::cout << (c.ok() ? "ok   " : "FAIL ") << c.name << " (" << c.instances << " instances)";
    if (!c.ok()) std::cout << ": " << c.failures << " failures, first: " << c.first_failure;
    std::cout << "\n";
    ok = ok && c.ok();
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak and singular del Pezzo surfaces over finite fields"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", o.out, "output file (directory for synthesize --all)");
  };
  auto add_target = [&](CLI::App* s, bool q) {
    s->add_option("--degree", o.degree, "degree 3..6")->required();
    s->add_option("--type", o.type, "type number, or O<k> for degree-4 ordinary types")->required();
    if (q) s->add_option("--q", o.q, "field size as p^m or an integer")->required();
    s->add_option("--seed", o.seed, "seed for randomized searches");
  };

  auto* en = app.add_subcommand("enumerate", "type tables for one degree");
  en->add_option("--degree", o.degree, "degree 3..6")->required();
  add_format(en);
  auto* ze = app.add_subcommand("zeta", "point counts and zeta function of a type");
  add_target(ze, true);
  ze->add_option("--nmax", o.nmax, "number of extensions");
  add_format(ze);
  auto* sy = app.add_subcommand("synthesize", "pair of quadrics for a degree-4 type");
  sy->add_option("--degree", o.degree, "must be 4")->required();
  sy->add_option("--type", o.type, "type number or O<k>");
  sy->add_option("--q", o.q, "field size as p^m or an integer")->required();
  sy->add_option("--seed", o.seed, "seed for the residue search");
  sy->add_flag("--all", o.all, "all 58 types into --out DIR with a manifest");
  add_format(sy);
  auto* ve = app.add_subcommand("verify", "check a pair against a claimed type");
  ve->add_option("--pair", o.pair, "pair JSON file")->required();
  ve->add_option("--degree", o.degree, "must be 4")->required();
  ve->add_option("--type", o.type, "claimed type")->required();
  ve->add_option("--nmax", o.nmax, "extensions to count over (1..6)");
  add_format(ve);
  auto* bp = app.add_subcommand("blowup-plan", "point configuration realizing a type");
  add_target(bp, true);
  add_format(bp);
  auto* dt = app.add_subcommand("deg3-table", "recomputed Galois action table for degree 4");
  add_format(dt);
  auto* re = app.add_subcommand("realize", "plan or non-existence certificate for a degree-3 type");
  add_target(re, true);
  add_format(re);
  auto* st = app.add_subcommand("selftest", "oracle cross-validations");
  st->add_option("--seed", o.seed, "seed for random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (sy->parsed() && !o.all && o.type.empty()) {
    std::cerr << "synthesize: --type or --all is required\n";
    return kUsage;
  }
  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (ze->parsed()) return cmd_zeta(o);
    if (sy->parsed()) return cmd_synthesize(o);
    if (ve->parsed()) return cmd_verify(o);
    if (bp->parsed()) return cmd_blowup_plan(o);
    if (dt->parsed()) return cmd_deg3_table(o);
    if (re->parsed()) return cmd_realize(o);
    if (st->parsed()) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
