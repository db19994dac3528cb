// SPDX-License-Identifier: MIT
#include "sympdesc/sympdesc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sympdesc/descent.hpp"
#include "sympdesc/errors.hpp"
#include "sympdesc/json_io.hpp"
#include "sympdesc/orbits.hpp"
#include "sympdesc/reps.hpp"
#include "sympdesc/verify.hpp"
#include "sympdesc/wavefront.hpp"

struct sd_rep {
  sympdesc::Representation rep;
  // Set when the handle was built from symbol text, kept for the support route.
  bool has_symbol = false;
  sympdesc::Symbol symbol;
};

namespace {

using namespace sympdesc;

thread_local std::string g_last_error;

sd_status to_status(ErrorCode c) { return static_cast<sd_status>(static_cast<int>(c)); }

template <class F>
sd_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return SD_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SD_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw Error(ErrorCode::Internal, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

const Symbol& rep_symbol(const sd_rep* r) {
  if (r->has_symbol) return r->symbol;
  if (auto* u = std::get_if<UnipotentRep>(&r->rep)) return u->symbol;
  if (auto* t = std::get_if<ThetaRep>(&r->rep)) return t->symbol_class.representative;
  throw Error(ErrorCode::InvalidArgument, "representation has no symbol");
}

}  // namespace

extern "C" {

const char* sd_last_error(void) { return g_last_error.c_str(); }

const char* sd_status_name(sd_status status) {
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

void sd_string_free(char* s) { std::free(s); }

sd_status sd_rep_from_symbol(const char* text, sd_rep** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const Symbol s = parse_symbol(text);
    *out = new sd_rep{rep_from_symbol(s), true, s};
  });
}

sd_status sd_rep_from_json(const char* json, sd_rep** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    const Json j = Json::parse(json);
    *out = new sd_rep{rep_from_json(j), false, {}};
  });
}

sd_status sd_rep_unipotent_cuspidal(int k, sd_rep** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sd_rep{unipotent_cuspidal(k), false, {}};
  });
}

void sd_rep_free(sd_rep* rep) { delete rep; }

sd_status sd_rep_rank(const sd_rep* rep, int* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = rank(rep->rep);
  });
}

sd_status sd_rep_json(const sd_rep* rep, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = dup_string(to_json(rep->rep).dump());
  });
}

sd_status sd_first_index(const sd_rep* rep, int* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = first_index(rep->rep);
  });
}

sd_status sd_descent_tree_json(const sd_rep* rep, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = dup_string(to_json(descent_tree(rep->rep)).dump());
  });
}

sd_status sd_descent_index_json(const sd_rep* rep, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    const DescentIndex idx = largest_index(rep->rep);
    Json j;
    j["ell_hat"] = idx;
    j["ell_hat_doubled"] = doubled(idx);
    if (std::holds_alternative<CaseARep>(rep->rep)) j["ell_tilde"] = nullptr;
    else j["ell_tilde"] = tilde_partition(idx);
    *out = dup_string(j.dump());
  });
}

sd_status sd_wavefront_json(const sd_rep* rep, sd_route route, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    WavefrontResult w;
    if (route == SD_ROUTE_SUPPORT) {
      w = wavefront(rep->rep, Route::Descent);
      w.route = Route::UnipotentSupport;
      w.stable = wavefront_support_route(rep_symbol(rep));
    } else {
      w = wavefront(rep->rep, Route::Descent);
    }
    *out = dup_string(to_json(w).dump());
  });
}

sd_status sd_check_consistency(const sd_rep* rep, int* agree, char** detail_json) {
  return guarded([&] {
    require(rep, "rep");
    require(agree, "agree");
    const Consistency c = check_consistency(rep_symbol(rep));
    *agree = c.agree ? 1 : 0;
    if (detail_json) {
      Json j{{"descent", c.descent}, {"support", c.support}, {"agree", c.agree}};
      *detail_json = dup_string(j.dump());
    }
  });
}

sd_status sd_enumerate_symbols_json(int rank_, int defect_, char** out) {
  return guarded([&] {
    require(out, "out");
    if (rank_ < 0) throw Error(ErrorCode::InvalidArgument, "rank must be nonnegative");
    Json arr = Json::array();
    for (const auto& s : enumerate_symbols(rank_, defect_)) {
      Json j = to_json(s);
      j["rank"] = rank(s);
      j["defect"] = defect(s);
      arr.push_back(j);
    }
    *out = dup_string(arr.dump());
  });
}

sd_status sd_enumerate_rep_symbols_json(int rank_, char** out) {
  return guarded([&] {
    require(out, "out");
    if (rank_ < 0) throw Error(ErrorCode::InvalidArgument, "rank must be nonnegative");
    Json arr = Json::array();
    for (const auto& s : representation_symbols(rank_)) {
      Json j = to_json(s);
      j["rank"] = rank(s);
      j["defect"] = defect(s);
      j["kind"] = is_theta_rep(s) ? "theta" : "unipotent";
      arr.push_back(j);
    }
    *out = dup_string(arr.dump());
  });
}

sd_status sd_enumerate_orbits_json(int n, int rational, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
    Json arr = Json::array();
    if (rational) {
      for (const auto& o : enumerate_rational(n)) arr.push_back(to_json(o));
    } else {
      for (const auto& s : enumerate_stable(n)) arr.push_back(Json{{"shape", s.parts}});
    }
    *out = dup_string(arr.dump());
  });
}

sd_status sd_atlas_jsonl(int max_rank, char** out) {
  return guarded([&] {
    require(out, "out");
    if (max_rank < 0) throw Error(ErrorCode::InvalidArgument, "max rank must be nonnegative");
    std::string text;
    for (const auto& s : atlas_symbols(max_rank)) text += atlas_record(s).dump() + "\n";
    *out = dup_string(text);
  });
}

sd_status sd_verify(int max_rank, const char* suite, int jobs, int* passed, char** report_json) {
  return guarded([&] {
    require(suite, "suite");
    require(passed, "passed");
    const auto reports = run_verification(max_rank, suite, jobs);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
      ok = ok && r.passed();
      arr.push_back({{"suite", r.name},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"seconds", r.seconds},
                     {"messages", r.messages}});
    }
    *passed = ok ? 1 : 0;
    if (report_json) *report_json = dup_string(arr.dump());
  });
}

}  // extern "C"
