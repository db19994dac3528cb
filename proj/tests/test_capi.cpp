// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <string>

#include "sympdesc/sympdesc.h"

namespace {

using Json = nlohmann::json;

Json take_json(char* s) {
  Json j = Json::parse(s);
  sd_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("symbol handles and wavefront") {
  sd_rep* rep = nullptr;
  REQUIRE(sd_rep_from_symbol("1;", &rep) == SD_OK);
  int r = -1;
  CHECK(sd_rep_rank(rep, &r) == SD_OK);
  CHECK(r == 1);
  int l0 = -1;
  CHECK(sd_first_index(rep, &l0) == SD_OK);
  CHECK(l0 == 0);
  char* out = nullptr;
  REQUIRE(sd_wavefront_json(rep, SD_ROUTE_DESCENT, &out) == SD_OK);
  const Json w = take_json(out);
  CHECK(w["stable"] == Json::array({1, 1}));
  CHECK(w["route"] == "DESCENT");
  CHECK(w["multiplicity_claim"] == "<=1");
  int agree = 0;
  REQUIRE(sd_check_consistency(rep, &agree, nullptr) == SD_OK);
  CHECK(agree == 1);
  REQUIRE(sd_descent_index_json(rep, &out) == SD_OK);
  const Json idx = take_json(out);
  CHECK(idx["ell_hat_doubled"] == Json::array({2}));
  CHECK(idx["ell_tilde"] == Json::array({1, 1}));
  REQUIRE(sd_descent_tree_json(rep, &out) == SD_OK);
  const Json tree = take_json(out);
  CHECK(tree["ell0"] == 0);
  CHECK(tree["children"].size() == 2);
  sd_rep_free(rep);
}

TEST_CASE("support route keeps the given symbol") {
  sd_rep* rep = nullptr;
  REQUIRE(sd_rep_from_symbol("2,1,0;", &rep) == SD_OK);
  char* out = nullptr;
  REQUIRE(sd_wavefront_json(rep, SD_ROUTE_SUPPORT, &out) == SD_OK);
  const Json w = take_json(out);
  CHECK(w["stable"] == Json::array({2, 2}));
  CHECK(w["route"] == "UNIPOTENT_SUPPORT");
  sd_rep_free(rep);
}

TEST_CASE("errors map to status codes") {
  sd_rep* rep = nullptr;
  CHECK(sd_rep_from_symbol("1,1;", &rep) == SD_ERR_PARSE);
  CHECK(std::string(sd_last_error()).size() > 0);
  CHECK(std::string(sd_status_name(SD_ERR_PARSE)) == "parse");
  CHECK(sd_rep_from_symbol(nullptr, &rep) == SD_ERR_INVALID_ARGUMENT);
  CHECK(sd_rep_from_json("{", &rep) == SD_ERR_PARSE);
  CHECK(sd_rep_from_json("{\"type\":\"case_a\",\"entries\":[{\"degree\":1,\"partition\":[1],\"partner\":3}]}", &rep) ==
        SD_ERR_PARSE);
  CHECK(sd_verify(2, "bogus", 1, nullptr, nullptr) == SD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("Case A through JSON") {
  sd_rep* rep = nullptr;
  REQUIRE(sd_rep_from_json("{\"type\":\"case_a\",\"entries\":[{\"degree\":1,\"partition\":[1],\"partner\":0}]}", &rep) ==
          SD_OK);
  char* out = nullptr;
  REQUIRE(sd_wavefront_json(rep, SD_ROUTE_DESCENT, &out) == SD_OK);
  const Json w = take_json(out);
  CHECK(w["stable"] == Json::array({2}));
  CHECK(w["multiplicity_claim"] == "=1");
  CHECK(w["supports"].size() == 2);
  CHECK(sd_wavefront_json(rep, SD_ROUTE_SUPPORT, &out) == SD_ERR_INVALID_ARGUMENT);
  sd_rep_free(rep);
}

TEST_CASE("cuspidal handle") {
  sd_rep* rep = nullptr;
  REQUIRE(sd_rep_unipotent_cuspidal(2, &rep) == SD_OK);
  char* out = nullptr;
  REQUIRE(sd_wavefront_json(rep, SD_ROUTE_DESCENT, &out) == SD_OK);
  CHECK(take_json(out)["stable"] == Json::array({4, 4, 2, 2}));
  sd_rep_free(rep);
  CHECK(sd_rep_unipotent_cuspidal(-1, &rep) == SD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enumeration") {
  char* out = nullptr;
  REQUIRE(sd_enumerate_symbols_json(1, 1, &out) == SD_OK);
  CHECK(take_json(out).size() == 2);
  REQUIRE(sd_enumerate_orbits_json(1, 1, &out) == SD_OK);
  CHECK(take_json(out).size() == 3);
  REQUIRE(sd_enumerate_orbits_json(2, 0, &out) == SD_OK);
  CHECK(take_json(out).size() == 4);
  REQUIRE(sd_enumerate_rep_symbols_json(0, &out) == SD_OK);
  CHECK(take_json(out).size() == 1);
}

TEST_CASE("atlas is deterministic") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(sd_atlas_jsonl(3, &a) == SD_OK);
  REQUIRE(sd_atlas_jsonl(3, &b) == SD_OK);
  CHECK(std::string(a) == std::string(b));
  sd_string_free(a);
  sd_string_free(b);
  REQUIRE(sd_atlas_jsonl(0, &a) == SD_OK);
  const std::string zero = a;
  sd_string_free(a);
  CHECK(std::count(zero.begin(), zero.end(), '\n') == 1);
}

TEST_CASE("verify through the C API") {
  int passed = 0;
  char* report = nullptr;
  REQUIRE(sd_verify(5, "all", 2, &passed, &report) == SD_OK);
  CHECK(passed == 1);
  const Json j = take_json(report);
  CHECK(j.size() == 2);
}
