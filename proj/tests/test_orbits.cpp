// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "sympdesc/errors.hpp"
#include "sympdesc/orbits.hpp"

using namespace sympdesc;

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

RationalOrbit orbit(Partition shape, std::vector<PartSign> signs) { return {{std::move(shape)}, std::move(signs)}; }

}  // namespace

TEST_CASE("validate_shape") {
  CHECK(validate_shape({2}).n() == 1);
  CHECK_NOTHROW(validate_shape({1, 1}));
  try {
    validate_shape({3, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddMultiplicity);
  }
  try {
    validate_shape({3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddTotal);
  }
}

TEST_CASE("enumerate_stable") {
  CHECK(enumerate_stable(0).size() == 1);
  const auto s1 = enumerate_stable(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].parts == Partition{2});
  CHECK(s1[1].parts == Partition{1, 1});
  const auto s2 = enumerate_stable(2);
  std::vector<Partition> shapes;
  for (const auto& s : s2) shapes.push_back(s.parts);
  CHECK(shapes == std::vector<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("enumerate_rational") {
  CHECK(enumerate_rational(0).size() == 1);
  const auto r1 = enumerate_rational(1);
  REQUIRE(r1.size() == 3);
  CHECK(r1[0] == orbit({2}, {{2, P}}));
  CHECK(r1[1] == orbit({2}, {{2, M}}));
  CHECK(r1[2] == orbit({1, 1}, {}));
  CHECK(enumerate_rational(2).size() == 7);
  for (int n = 0; n <= 6; ++n) {
    long expected = 0;
    for (const auto& s : enumerate_stable(n)) {
      std::set<int> evens;
      for (int x : s.parts)
        if (x % 2 == 0) evens.insert(x);
      expected += 1L << evens.size();
    }
    CHECK(static_cast<long>(enumerate_rational(n).size()) == expected);
  }
}

TEST_CASE("scale") {
  CHECK(scale(orbit({2}, {{2, P}}), M) == orbit({2}, {{2, M}}));
  CHECK(scale(orbit({2, 2}, {{2, P}}), M) == orbit({2, 2}, {{2, P}}));
  for (int n = 0; n <= 5; ++n)
    for (const auto& o : enumerate_rational(n)) {
      REQUIRE(scale(o, P) == o);
      REQUIRE(scale(scale(o, M), M) == o);
      REQUIRE(scale(o, M).shape == o.shape);
    }
}

TEST_CASE("fold_signs") {
  CHECK(fold_signs({2}, {P}) == orbit({2}, {{2, P}}));
  CHECK(fold_signs({2, 2}, {P, P}) == orbit({2, 2}, {{2, M}}));
  CHECK(fold_signs({2, 2}, {P, M}) == orbit({2, 2}, {{2, P}}));
  CHECK_THROWS_AS(fold_signs({2, 2}, {P}), Error);
}

TEST_CASE("fold_signs ignores the order within one part value, k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    const Partition shape(k, 2);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Sign> l;
      for (int i = 0; i < k; ++i) l.push_back((mask >> i) & 1u ? M : P);
      const RationalOrbit base = fold_signs(shape, l);
      std::sort(l.begin(), l.end());
      do {
        REQUIRE(fold_signs(shape, l) == base);
      } while (std::next_permutation(l.begin(), l.end()));
    }
  }
}

TEST_CASE("compose") {
  const LayeredOrbit one = compose(2, P, {});
  CHECK(one == LayeredOrbit{{2}, {P}});
  CHECK(compose(4, P, LayeredOrbit{{2, 1, 1}, {P}}) == LayeredOrbit{{4, 2, 1, 1}, {P, P}});
  CHECK(compose(2, P, LayeredOrbit{{2}, {P}}) == LayeredOrbit{{2, 2}, {M, P}});
  CHECK(compose(4, M, LayeredOrbit{{2}, {P}}) == LayeredOrbit{{4, 2}, {M, M}});
  try {
    compose(2, P, LayeredOrbit{{4}, {P}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDominant);
  }
  CHECK_THROWS_AS(compose(3, P, {}), Error);
}

TEST_CASE("compose then fold validates along every decreasing sequence of even parts <= 8") {
  // Compose prepends, so build from the smallest part upward.
  std::function<void(const LayeredOrbit&)> grow = [&](const LayeredOrbit& cur) {
    if (!cur.shape.empty()) REQUIRE(is_symplectic(fold_signs(cur.shape, cur.layered).shape.parts));
    if (size(cur.shape) >= 14) return;
    const int lo = cur.shape.empty() ? 2 : std::max(2, cur.shape.front() + cur.shape.front() % 2);
    for (int p = lo; p <= 8; p += 2)
      for (Sign e : {P, M}) grow(compose(p, e, cur));
  };
  grow(LayeredOrbit{});
  grow(LayeredOrbit{{1, 1}, {}});
}

TEST_CASE("closure order") {
  CHECK(closure_leq({{1, 1}}, {{2}}));
  CHECK(closure_leq({{2, 2}}, {{4}}));
  CHECK_FALSE(closure_leq({{4}}, {{2, 2}}));
  CHECK_THROWS_AS(closure_leq({{2}}, {{4}}), Error);
}
