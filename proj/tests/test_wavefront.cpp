// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <random>
#include <set>

#include "sympdesc/errors.hpp"
#include "sympdesc/json_io.hpp"
#include "sympdesc/wavefront.hpp"

using namespace sympdesc;

namespace {

Symbol S(std::vector<int> a, std::vector<int> b) { return Symbol{std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("unipotent support examples") {
  CHECK(unipotent_support_partition(S({1}, {})) == Partition{2});
  CHECK(unipotent_support_partition(S({1, 0}, {1})) == Partition{1, 1});
  CHECK(unipotent_support_partition(S({2, 1, 0}, {})) == Partition{2, 2});
}

TEST_CASE("support route examples") {
  CHECK(wavefront_support_route(S({1}, {})).parts == Partition{1, 1});
  CHECK(wavefront_support_route(S({1, 0}, {1})).parts == Partition{2});
  CHECK(wavefront_support_route(S({2, 1, 0}, {})).parts == Partition{2, 2});
  // Halves of the Weil representation of Sp2 carry the regular orbit.
  CHECK(wavefront_support_route(S({0}, {1})).parts == Partition{2});
  CHECK(wavefront_support_route(S({1, 0}, {})).parts == Partition{2});
}

TEST_CASE("descent route examples") {
  CHECK(wavefront_descent_route(UnipotentRep{S({1}, {})}).parts == Partition{1, 1});
  CHECK(wavefront_descent_route(unipotent_cuspidal(2)).parts == Partition{4, 4, 2, 2});
  CHECK(wavefront_descent_route(make_case_a({{1, {2, 1}, 1}, {1, {2, 1}, 0}})).parts == Partition{8, 4});
}

TEST_CASE("consistency examples") {
  for (const auto& s : enumerate_symbols(1, 1)) CHECK(check_consistency(s).agree);
  CHECK(check_consistency(S({2, 1, 0}, {})).agree);
}

TEST_CASE("both routes agree for every unipotent and theta symbol of rank <= 10") {
  long count = 0;
  for (const auto& s : atlas_symbols(10)) {
    const Consistency c = check_consistency(s);
    INFO(to_text(s));
    REQUIRE(c.agree);
    REQUIRE(is_symplectic(c.descent));
    REQUIRE(size(c.descent) == 2 * rank(s));
    ++count;
  }
  CHECK(count == 3179);
}

TEST_CASE("tilde first part is 2 l0 or 2 l0 + 1, rank <= 10") {
  for (const auto& s : atlas_symbols(10)) {
    if (rank(s) == 0) continue;
    const Representation rep = rep_from_symbol(s);
    const Partition w = wavefront_descent_route(rep).parts;
    const int l0 = first_index(rep);
    REQUIRE((w.front() == 2 * l0 || w.front() == 2 * l0 + 1));
  }
}

TEST_CASE("Case A supports on Sp2 cover both rational orbits") {
  const auto sup = supporting_orbits(make_case_a({{1, {1}, 0}}));
  REQUIRE(sup.size() == 2);
  std::set<RationalOrbit> folded;
  for (const auto& o : sup) folded.insert(o.folded);
  CHECK(folded.count(RationalOrbit{{{2}}, {{2, Sign::Plus}}}) == 1);
  CHECK(folded.count(RationalOrbit{{{2}}, {{2, Sign::Minus}}}) == 1);
}

TEST_CASE("trivial group has the empty orbit") {
  const auto sup = supporting_orbits(UnipotentRep{S({0}, {})});
  REQUIRE(sup.size() == 1);
  CHECK(sup.front().layered.shape.empty());
}

TEST_CASE("cuspidal supports pair their signs, k <= 3") {
  for (int k = 1; k <= 3; ++k) {
    const Representation rep{unipotent_cuspidal(k)};
    const auto stable = wavefront_descent_route(rep);
    const auto sup = supporting_orbits(rep);
    REQUIRE(!sup.empty());
    for (const auto& o : sup) {
      REQUIRE(o.layered.shape == stable.parts);
      REQUIRE(o.folded.shape == stable);
      for (std::size_t i = 0; i + 1 < o.layered.layered.size(); i += 2)
        REQUIRE(o.layered.layered[i] == o.layered.layered[i + 1]);
    }
  }
}

TEST_CASE("branching descents report per-branch supports") {
  const Representation triv{UnipotentRep{S({1}, {})}};
  try {
    supporting_orbits(triv);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Branching);
  }
  const auto branches = supporting_orbits_per_branch(triv);
  REQUIRE(branches.size() == 2);
  for (const auto& b : branches) CHECK(b.path == DescentIndex{0, 1});
  const WavefrontResult w = wavefront(triv, Route::Descent);
  CHECK(w.branching);
  CHECK(w.stable.parts == Partition{1, 1});
  CHECK(w.branches.size() == 2);
}

TEST_CASE("irreducible supports share the stable shape, rank <= 8") {
  for (const auto& s : atlas_symbols(8)) {
    const Representation rep = rep_from_symbol(s);
    std::vector<SupportOrbit> sup;
    try {
      sup = supporting_orbits(rep);
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::Branching);
      continue;
    }
    const auto stable = wavefront_descent_route(rep);
    for (const auto& o : sup) REQUIRE(o.folded.shape == stable);
  }
}

TEST_CASE("Case A wavefront structure, random data") {
  std::mt19937 rng(5);
  auto rand_partition = [&] {
    std::vector<int> v;
    const int len = static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) v.push_back(1 + static_cast<int>(rng() % 6));
    return make_partition(v);
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CaseAEntry> e;
    const int pairs = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < pairs; ++p) {
      const int j = static_cast<int>(e.size());
      e.push_back({1, rand_partition(), j + 1});
      e.push_back({1, rand_partition(), j});
    }
    const Representation rep{make_case_a(e)};
    const WavefrontResult w = wavefront(rep, Route::Descent);
    CHECK(w.multiplicity_claim == "=1");
    REQUIRE_FALSE(w.branching);
    for (int x : w.stable.parts) REQUIRE(x % 2 == 0);
    if (rank(rep) > 0) REQUIRE(w.stable.parts.front() == 2 * first_index(rep));
    for (const auto& o : w.supports) REQUIRE(o.folded.shape == w.stable);
  }
}

TEST_CASE("support route rejects Case A") {
  CHECK_THROWS_AS(wavefront(make_case_a({{1, {1}, 0}}), Route::UnipotentSupport), Error);
  const WavefrontResult w = wavefront(UnipotentRep{S({1, 0}, {1})}, Route::UnipotentSupport);
  CHECK(w.stable.parts == Partition{2});
  CHECK(std::string(route_name(w.route)) == "UNIPOTENT_SUPPORT");
}
