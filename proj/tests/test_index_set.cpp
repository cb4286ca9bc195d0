// Copyright 2026 The seqspace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "seqspace/index_set.hpp"

using namespace seqspace;

TEST_CASE("odds and evens") {
  const IndexSet odds = IndexSet::odds();
  const IndexSet evens = IndexSet::evens();
  CHECK(odds.enumerate(1) == 1);
  CHECK(odds.enumerate(5) == 9);
  CHECK(evens.enumerate(5) == 10);
  CHECK(odds.contains(7));
  CHECK(!odds.contains(8));
  CHECK(odds.rank(9) == 5);
  CHECK(!odds.rank(4).has_value());
  CHECK(odds.count_leq(10) == 5);
}

TEST_CASE("dyadic rays partition the positive integers") {
  std::vector<IndexSet> rays;
  for (uint32_t i = 1; i <= 15; ++i) rays.push_back(IndexSet::dyadic_ray(i));
  for (uint64_t j = 1; j <= 10'000; ++j) {
    int hits = 0;
    for (const auto& r : rays) hits += r.contains(j);
    CHECK(hits == 1);
  }
  // Known prefixes.
  CHECK(rays[0].enumerate(1) == 1);   // ray 1 = odds
  CHECK(rays[1].enumerate(1) == 2);   // ray 2 = {2, 6, 10, ...}
  CHECK(rays[1].enumerate(2) == 6);
  CHECK(rays[2].enumerate(1) == 4);   // ray 3 = {4, 12, 20, ...}
  CHECK(rays[2].enumerate(2) == 12);
}

TEST_CASE("rank and enumerate agree on random sets") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<uint64_t> stride(1, 9);
  std::uniform_int_distribution<int64_t> off(-3, 12);
  std::uniform_int_distribution<uint32_t> level(1, 8);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<IndexSet> sets;
    const uint64_t c = stride(rng) + 1;  // stride >= 2 keeps complements infinite
    const int64_t d = std::max<int64_t>(off(rng), 1 - static_cast<int64_t>(c));
    sets.push_back(IndexSet::arithmetic(c, d));
    sets.push_back(IndexSet::dyadic_ray(level(rng)));
    sets.push_back(IndexSet::complement_of(IndexSet::arithmetic(c, d)));
    for (const auto& s : sets) {
      for (uint64_t m = 1; m <= 200; ++m) {
        const uint64_t j = s.enumerate(m);
        CHECK(s.contains(j));
        CHECK(s.rank(j) == m);
      }
    }
  }
}

TEST_CASE("counting matches a brute-force scan") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<uint64_t> stride(2, 7);
  for (int iter = 0; iter < 20; ++iter) {
    const uint64_t c = stride(rng);
    const IndexSet s = IndexSet::arithmetic(c, 0);
    const IndexSet comp = IndexSet::complement_of(s);
    uint64_t count_s = 0, count_c = 0;
    for (uint64_t j = 1; j <= 500; ++j) {
      count_s += s.contains(j);
      count_c += comp.contains(j);
      CHECK(s.count_leq(j) == count_s);
      CHECK(comp.count_leq(j) == count_c);
    }
  }
}

TEST_CASE("explicit finite sets") {
  const IndexSet s = IndexSet::explicit_finite({2, 4, 9});
  CHECK(!s.infinite());
  CHECK(s.finite_size() == 3);
  CHECK(s.enumerate(2) == 4);
  CHECK(s.rank(9) == 3);
  CHECK(!s.contains(3));
  CHECK_THROWS(s.enumerate(4));
  CHECK_THROWS(IndexSet::explicit_finite({3, 3}));
  CHECK_THROWS(IndexSet::explicit_finite({0}));
  // The empty set is allowed (used by degenerate splits).
  const IndexSet empty = IndexSet::explicit_finite({});
  CHECK(empty.count_leq(100) == 0);
}

TEST_CASE("complement enumeration") {
  const IndexSet not_odds = IndexSet::complement_of(IndexSet::odds());
  for (uint64_t m = 1; m <= 100; ++m) CHECK(not_odds.enumerate(m) == 2 * m);
  // Double complement collapses.
  const IndexSet back = IndexSet::complement_of(not_odds);
  CHECK(back.enumerate(3) == 5);
}
