// SPDX-License-Identifier: MIT
#include "sympdesc/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "sympdesc/descent.hpp"
#include "sympdesc/errors.hpp"
#include "sympdesc/json_io.hpp"
#include "sympdesc/wavefront.hpp"

namespace sympdesc {

namespace {

constexpr std::size_t kMaxMessages = 20;

using Check = std::vector<std::string> (*)(const Symbol&);

std::string idx_text(const DescentIndex& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

std::vector<std::string> check_consistency_case(const Symbol& s) {
  try {
    const Consistency c = check_consistency(s);
    if (c.agree) return {};
    return {to_text(s) + ": descent " + to_text(c.descent) + " vs support " + to_text(c.support)};
  } catch (const Error& e) {
    return {to_text(s) + ": " + error_code_name(e.code()) + ": " + e.what()};
  }
}

const Symbol& node_symbol(const DescentNode& n) {
  if (auto* u = std::get_if<UnipotentRep>(&n.rep)) return u->symbol;
  return std::get<ThetaRep>(n.rep).symbol_class.representative;
}

void check_node(const DescentNode& n, std::vector<std::string>& out) {
  if (n.children.empty()) return;
  const Symbol& s = node_symbol(n);
  const auto [x, y] = boundary_values(s);
  if ((x == y) != (n.children.size() == 2))
    out.push_back(to_text(s) + ": branching does not match boundary equality");
  if (std::max(x, y) != n.ell0) out.push_back(to_text(s) + ": boundary formula differs from rank drop");
  const bool theta = std::holds_alternative<ThetaRep>(n.rep);
  for (const auto& c : n.children) {
    if (c.children.empty()) continue;
    // theta -> unipotent child: l_child <= l; unipotent -> theta child: l_child <= l + 1.
    const int bound = theta ? n.ell0 : n.ell0 + 1;
    if (c.ell0 > bound)
      out.push_back(to_text(s) + " -> " + to_text(node_symbol(c)) + ": adjacent-step bound violated");
    check_node(c, out);
  }
}

std::vector<std::string> check_properties_case(const Symbol& s) {
  std::vector<std::string> out;
  try {
    const Representation rep = rep_from_symbol(s);
    const DescentNode tree = descent_tree(rep);
    check_node(tree, out);
    for (const auto& idx : all_indices(tree))
      for (std::size_t i = 0; i + 2 < idx.size(); ++i)
        if (idx[i] < idx[i + 2]) {
          out.push_back(to_text(s) + ": path " + idx_text(idx) + " has l_i < l_{i+2}");
          break;
        }
    const DescentIndex big = largest_index(tree);
    if (big.empty()) return out;
    const Partition t = tilde_partition(big);
    if (size(t) != 2 * rank(s)) out.push_back(to_text(s) + ": tilde partition total is not 2n");
    const int l0 = big.front();
    if (t.empty() || (t.front() != 2 * l0 && t.front() != 2 * l0 + 1))
      out.push_back(to_text(s) + ": tilde first part not in {2l0, 2l0+1}");
  } catch (const Error& e) {
    out.push_back(to_text(s) + ": " + error_code_name(e.code()) + ": " + e.what());
  }
  return out;
}

SuiteReport run_suite(const std::string& name, Check check, const std::vector<Symbol>& symbols, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<std::string>> results(symbols.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < symbols.size(); i = next++) results[i] = check(symbols[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport r;
  r.name = name;
  r.cases = static_cast<long>(symbols.size());
  for (const auto& msgs : results) {
    if (msgs.empty()) continue;
    ++r.failures;
    for (const auto& m : msgs)
      if (r.messages.size() < kMaxMessages) r.messages.push_back(m);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<SuiteReport> run_verification(int max_rank, const std::string& suite, int jobs) {
  if (suite != "consistency" && suite != "properties" && suite != "all")
    fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  if (max_rank < 0) fail(ErrorCode::InvalidArgument, "max rank must be nonnegative");
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::vector<Symbol> symbols = atlas_symbols(max_rank);
  std::vector<SuiteReport> out;
  if (suite != "properties") out.push_back(run_suite("consistency", check_consistency_case, symbols, jobs));
  if (suite != "consistency") out.push_back(run_suite("properties", check_properties_case, symbols, jobs));
  return out;
}

}  // namespace sympdesc
