// SPDX-License-Identifier: MIT
// Command-line front end over the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <json.hpp>
#include <string>

#include "sympdesc/sympdesc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

void check(sd_status st) {
  if (st == SD_OK) return;
  const bool usage = st == SD_ERR_PARSE || st == SD_ERR_INVALID_ARGUMENT;
  throw CliError{usage ? kExitUsage : kExitFailure,
                 std::string(sd_status_name(st)) + ": " + sd_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  sd_string_free(s);
  return out;
}

struct RepDeleter {
  void operator()(sd_rep* r) const { sd_rep_free(r); }
};
using RepPtr = std::unique_ptr<sd_rep, RepDeleter>;

struct RepInput {
  std::string symbol;
  std::string rep_json;
  int cuspidal = -1;
};

void add_rep_options(CLI::App* cmd, RepInput& in) {
  auto* sym = cmd->add_option("--symbol", in.symbol, "symbol text \"a1,a2,...;b1,b2,...\"");
  auto* js = cmd->add_option("--rep-json", in.rep_json, "representation as JSON");
  auto* cu = cmd->add_option("--cuspidal", in.cuspidal, "unipotent cuspidal of Sp_{2k(k+1)}")->check(CLI::NonNegativeNumber);
  sym->excludes(js)->excludes(cu);
  js->excludes(cu);
}

RepPtr load_rep(const RepInput& in) {
  sd_rep* r = nullptr;
  if (!in.symbol.empty()) check(sd_rep_from_symbol(in.symbol.c_str(), &r));
  else if (!in.rep_json.empty()) check(sd_rep_from_json(in.rep_json.c_str(), &r));
  else if (in.cuspidal >= 0) check(sd_rep_unipotent_cuspidal(in.cuspidal, &r));
  else throw CliError{kExitUsage, "one of --symbol, --rep-json or --cuspidal is required"};
  return RepPtr(r);
}

std::string parts_text(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i].get<int>());
  return s + ")";
}

std::string symbol_text(const Json& s) {
  auto row = [](const Json& a) {
    std::string r;
    for (std::size_t i = 0; i < a.size(); ++i) r += (i ? "," : "") + std::to_string(a[i].get<int>());
    return r;
  };
  return row(s["top"]) + ";" + row(s["bottom"]);
}

std::string orbit_text(const Json& o) {
  std::string s = parts_text(o["shape"]);
  if (o.contains("signs") && !o["signs"].empty()) {
    s += " [";
    bool first = true;
    for (const auto& ps : o["signs"]) {
      s += (first ? "" : " ") + std::to_string(ps["part"].get<int>()) + ":" + ps["sign"].get<std::string>();
      first = false;
    }
    s += "]";
  }
  if (o.contains("layered")) {
    s += " layered ";
    for (const auto& x : o["layered"]) s += x.get<std::string>();
  }
  return s;
}

std::string rep_text(const Json& r) {
  const std::string type = r["type"];
  if (type == "case_a") return "case_a " + r["entries"].dump();
  return type + " " + symbol_text(r["symbol"]);
}

void print_tree(const Json& node, int depth) {
  std::cout << std::string(2 * depth, ' ') << rep_text(node["rep"]);
  if (!node["children"].empty()) std::cout << "  ell0=" << node["ell0"].get<int>();
  std::cout << "\n";
  for (const auto& c : node["children"]) print_tree(c, depth + 1);
}

int run_enumerate(int rank, bool has_defect, int defect, bool orbits, int n, bool rational, bool json) {
  char* out = nullptr;
  if (orbits) {
    if (n < 0) throw CliError{kExitUsage, "--orbits needs --n"};
    check(sd_enumerate_orbits_json(n, rational ? 1 : 0, &out));
    const Json arr = Json::parse(take(out));
    if (json) {
      std::cout << arr.dump() << "\n";
      return kExitOk;
    }
    for (const auto& o : arr) std::cout << orbit_text(o) << "\n";
    return kExitOk;
  }
  if (rank < 0) throw CliError{kExitUsage, "enumerate needs --rank (or --orbits --n)"};
  if (has_defect) check(sd_enumerate_symbols_json(rank, defect, &out));
  else check(sd_enumerate_rep_symbols_json(rank, &out));
  const Json arr = Json::parse(take(out));
  if (json) {
    std::cout << arr.dump() << "\n";
    return kExitOk;
  }
  std::cout << "rank\tdefect\tsymbol\n";
  for (const auto& s : arr)
    std::cout << s["rank"].get<int>() << "\t" << s["defect"].get<int>() << "\t" << symbol_text(s) << "\n";
  return kExitOk;
}

int run_wavefront(const RepInput& in, const std::string& route, bool json) {
  RepPtr rep = load_rep(in);
  Json result;
  char* out = nullptr;
  if (route == "descent" || route == "both") {
    check(sd_wavefront_json(rep.get(), SD_ROUTE_DESCENT, &out));
    result["descent"] = Json::parse(take(out));
  }
  // Case A data has no symbol, so "both" runs the descent route alone there.
  check(sd_rep_json(rep.get(), &out));
  const bool has_symbol = Json::parse(take(out)).value("type", "") != "case_a";
  if (route == "support" || (route == "both" && has_symbol)) {
    check(sd_wavefront_json(rep.get(), SD_ROUTE_SUPPORT, &out));
    result["support"] = Json::parse(take(out));
  }
  if (route == "both" && has_symbol) result["agree"] = result["descent"]["stable"] == result["support"]["stable"];
  if (json) {
    std::cout << result.dump() << "\n";
    return kExitOk;
  }
  const Json& main = result.contains("descent") ? result["descent"] : result["support"];
  if (result.contains("descent")) std::cout << "descent route: " << parts_text(result["descent"]["stable"]) << "\n";
  if (result.contains("support")) std::cout << "support route: " << parts_text(result["support"]["stable"]) << "\n";
  if (result.contains("agree")) std::cout << "routes agree: " << (result["agree"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "multiplicity claim: " << main["multiplicity_claim"].get<std::string>() << "\n";
  if (main["branching"].get<bool>()) {
    std::cout << "largest descent branches; supports per branch:\n";
    for (const auto& b : main["branches"]) {
      std::cout << "  path " << parts_text(b["path"]) << (b["dominant"].get<bool>() ? "" : " (not dominant)") << "\n";
      for (const auto& o : b["supports"]) std::cout << "    " << orbit_text(o) << "\n";
    }
  } else {
    std::cout << "supports:\n";
    for (const auto& o : main["supports"]) std::cout << "  " << orbit_text(o) << "\n";
  }
  return result.value("agree", true) ? kExitOk : kExitFailure;
}

int run_descent(const RepInput& in, bool json) {
  RepPtr rep = load_rep(in);
  char* out = nullptr;
  check(sd_descent_tree_json(rep.get(), &out));
  const Json tree = Json::parse(take(out));
  check(sd_descent_index_json(rep.get(), &out));
  const Json idx = Json::parse(take(out));
  if (json) {
    std::cout << Json{{"tree", tree}, {"index", idx}}.dump() << "\n";
    return kExitOk;
  }
  print_tree(tree, 0);
  std::cout << "ell_hat: " << parts_text(idx["ell_hat_doubled"]) << "\n";
  if (!idx["ell_tilde"].is_null()) std::cout << "ell_tilde: " << parts_text(idx["ell_tilde"]) << "\n";
  return kExitOk;
}

int run_verify(int max_rank, const std::string& suite, int jobs) {
  int passed = 0;
  char* out = nullptr;
  check(sd_verify(max_rank, suite.c_str(), jobs, &passed, &out));
  const Json reports = Json::parse(take(out));
  for (const auto& r : reports) {
    std::printf("%-12s cases=%ld failures=%ld time=%.2fs %s\n", r["suite"].get<std::string>().c_str(),
                r["cases"].get<long>(), r["failures"].get<long>(), r["seconds"].get<double>(),
                r["failures"].get<long>() == 0 ? "PASS" : "FAIL");
    for (const auto& m : r["messages"]) std::printf("  %s\n", m.get<std::string>().c_str());
  }
  return passed ? kExitOk : kExitFailure;
}

int run_atlas(int max_rank, const std::string& path) {
  char* out = nullptr;
  check(sd_atlas_jsonl(max_rank, &out));
  const std::string text = take(out);
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitFailure, "cannot open " + path};
  f << text;
  if (!f) throw CliError{kExitFailure, "write failed: " + path};
  return kExitOk;
}

int default_jobs() {
  if (const char* env = std::getenv("SYMPDESC_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent sequences and wavefront sets for finite symplectic groups"};
  app.require_subcommand(1);

  int rank = -1, defect = 0, n = -1;
  bool orbits = false, rational = false, json = false;
  auto* en = app.add_subcommand("enumerate", "list symbols or nilpotent orbits");
  en->add_option("--rank", rank, "symbol rank")->check(CLI::NonNegativeNumber);
  auto* def_opt = en->add_option("--defect", defect, "symbol defect (default: all representation symbols)");
  en->add_flag("--orbits", orbits, "list orbits instead of symbols");
  en->add_option("--n", n, "orbits of sp_2n")->check(CLI::NonNegativeNumber);
  en->add_flag("--rational", rational, "list rational orbits with signs");
  en->add_flag("--json", json, "JSON output");

  RepInput wf_in;
  std::string route = "both";
  auto* wf = app.add_subcommand("wavefront", "wavefront set by one or both routes");
  add_rep_options(wf, wf_in);
  wf->add_option("--route", route, "both|descent|support")->check(CLI::IsMember({"both", "descent", "support"}));
  wf->add_flag("--json", json, "JSON output");

  RepInput ds_in;
  auto* ds = app.add_subcommand("descent", "descent tree and indices");
  add_rep_options(ds, ds_in);
  ds->add_flag("--json", json, "JSON output");

  int max_rank = 8;
  std::string suite = "all";
  int jobs = default_jobs();
  auto* vf = app.add_subcommand("verify", "run the invariant suites");
  vf->add_option("--max-rank", max_rank, "largest rank checked")->check(CLI::NonNegativeNumber);
  vf->add_option("--suite", suite, "consistency|properties|all")
      ->check(CLI::IsMember({"consistency", "properties", "all"}));
  vf->add_option("--jobs", jobs, "worker threads (0: all cores; default from SYMPDESC_JOBS)")
      ->check(CLI::NonNegativeNumber);

  int atlas_rank = 2;
  std::string out_path = "-";
  auto* at = app.add_subcommand("atlas", "write a JSON-lines atlas");
  at->add_option("--max-rank", atlas_rank, "largest rank included")->check(CLI::NonNegativeNumber);
  at->add_option("--out", out_path, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*en) return run_enumerate(rank, def_opt->count() > 0, defect, orbits, n, rational, json);
    if (*wf) return run_wavefront(wf_in, route, json);
    if (*ds) return run_descent(ds_in, json);
    if (*vf) return run_verify(max_rank, suite, jobs);
    if (*at) return run_atlas(atlas_rank, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
