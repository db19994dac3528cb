// SPDX-License-Identifier: MIT
#include "sympdesc/json_io.hpp"

#include <algorithm>

#include "sympdesc/errors.hpp"

namespace sympdesc {

namespace {

std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::Parse, std::string(what) + " must hold integers");
    v.push_back(x.get<int>());
  }
  return v;
}

Json branch_json(const BranchSupports& b) {
  Json j;
  j["path"] = b.path;
  j["dominant"] = b.dominant;
  j["supports"] = Json::array();
  for (const auto& s : b.supports) j["supports"].push_back(to_json(s));
  return j;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p); }

Json to_json(const Symbol& s) { return Json{{"top", s.top}, {"bottom", s.bottom}}; }

Json to_json(const RationalOrbit& o) {
  Json signs = Json::array();
  for (const auto& ps : o.signs) signs.push_back({{"part", ps.part}, {"sign", sign_text(ps.sign)}});
  return Json{{"shape", o.shape.parts}, {"signs", signs}};
}

Json to_json(const LayeredOrbit& o) {
  Json layered = Json::array();
  for (Sign s : o.layered) layered.push_back(sign_text(s));
  return Json{{"shape", o.shape}, {"layered", layered}};
}

Json to_json(const SupportOrbit& o) {
  Json j = to_json(o.folded);
  j["layered"] = to_json(o.layered)["layered"];
  return j;
}

Json to_json(const CaseARep& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"degree", e.degree}, {"partition", e.partition}, {"partner", e.partner}});
  return Json{{"entries", entries}};
}

Json to_json(const GeneralRep& r) {
  return Json{{"case_a", to_json(r.case_a)},
              {"unipotent", to_json(r.unipotent)},
              {"theta", to_json(r.theta.representative)}};
}

Json to_json(const Representation& r) {
  if (auto* u = std::get_if<UnipotentRep>(&r)) return Json{{"type", "unipotent"}, {"symbol", to_json(u->symbol)}};
  if (auto* t = std::get_if<ThetaRep>(&r))
    return Json{{"type", "theta"}, {"symbol", to_json(t->symbol_class.representative)}};
  Json j{{"type", "case_a"}};
  j["entries"] = to_json(std::get<CaseARep>(r))["entries"];
  return j;
}

Json to_json(const DescentNode& n) {
  Json children = Json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  return Json{{"rep", to_json(n.rep)}, {"ell0", n.ell0}, {"children", children}};
}

Json to_json(const WavefrontResult& w) {
  Json j;
  j["stable"] = w.stable.parts;
  j["route"] = route_name(w.route);
  j["supports"] = Json::array();
  for (const auto& s : w.supports) j["supports"].push_back(to_json(s));
  j["multiplicity_claim"] = w.multiplicity_claim;
  j["branching"] = w.branching;
  if (w.branching) {
    j["branches"] = Json::array();
    for (const auto& b : w.branches) j["branches"].push_back(branch_json(b));
  }
  return j;
}

Symbol symbol_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bottom"))
    fail(ErrorCode::Parse, "symbol needs \"top\" and \"bottom\"");
  Symbol s{int_array(j["top"], "top"), int_array(j["bottom"], "bottom")};
  if (!is_valid_symbol(s)) fail(ErrorCode::Parse, "symbol rows must be strictly decreasing naturals");
  return normalize(std::move(s));
}

CaseARep case_a_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    fail(ErrorCode::Parse, "Case A data needs an \"entries\" array");
  std::vector<CaseAEntry> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("partition")) fail(ErrorCode::Parse, "entry needs a \"partition\"");
    CaseAEntry ce;
    ce.degree = e.value("degree", 1);
    ce.partition = int_array(e["partition"], "partition");
    ce.partner = e.value("partner", static_cast<int>(entries.size()));
    entries.push_back(std::move(ce));
  }
  try {
    return make_case_a(std::move(entries));
  } catch (const Error& err) {
    fail(ErrorCode::Parse, err.what());
  }
}

Representation rep_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "representation must be an object");
  const std::string type = j.value("type", "");
  try {
    if (type == "case_a") return case_a_from_json(j);
    if (!j.contains("symbol")) fail(ErrorCode::Parse, "representation needs a \"symbol\"");
    const Symbol s = symbol_from_json(j["symbol"]);
    if (type == "unipotent") return make_unipotent(s);
    if (type == "theta") return make_theta(s);
    if (type.empty()) return rep_from_symbol(s);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) fail(ErrorCode::Parse, e.what());
    throw;
  }
  fail(ErrorCode::Parse, "unknown representation type '" + type + "'");
}

std::vector<Symbol> representation_symbols(int r) {
  std::vector<Symbol> out;
  const int bound = 2 * r + 3;
  for (int d = -bound; d <= bound; ++d) {
    const int m = ((d % 4) + 4) % 4;
    const bool unip = m == 1;
    // Sp_0 has a single irreducible representation, the unipotent (0 ; -).
    const bool theta = d >= 0 && d % 2 == 0 && r > 0;
    if (!unip && !theta) continue;
    for (auto& s : enumerate_symbols(r, d)) {
      if (theta && d == 0 && symbol_class(s).representative != s) continue;
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Symbol& a, const Symbol& b) {
    const int da = defect(a), db = defect(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

std::vector<Symbol> atlas_symbols(int max_rank) {
  std::vector<Symbol> out;
  for (int r = 0; r <= max_rank; ++r) {
    auto part = representation_symbols(r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Json atlas_record(const Symbol& s) {
  const Representation rep = rep_from_symbol(s);
  Json j;
  j["symbol"] = to_json(s);
  j["kind"] = is_theta_rep(s) ? "theta" : "unipotent";
  j["rank"] = rank(s);
  j["defect"] = defect(s);
  const DescentIndex idx = largest_index(rep);
  j["ell_hat"] = idx;
  j["ell_hat_doubled"] = doubled(idx);
  j["ell_tilde"] = tilde_partition(idx);
  const Consistency c = check_consistency(s);
  j["wavefront_stable"] = c.descent;
  j["wavefront_support"] = c.support;
  const WavefrontResult w = wavefront(rep, Route::Descent);
  j["branching"] = w.branching;
  j["supports"] = Json::array();
  for (const auto& o : w.supports) j["supports"].push_back(to_json(o));
  j["multiplicity_claim"] = w.multiplicity_claim;
  j["consistency"] = c.agree;
  return j;
}

}  // namespace sympdesc
