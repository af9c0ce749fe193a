// Copyright 2026 The Eigencert Authors
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

#include "eigencert/costmodel.hpp"
#include "eigencert/models.hpp"

using namespace eigencert;

TEST_CASE("reference point n=5, l=4, r=10") {
  const ResourceCount rc = count_resources(5, 4, 10);
  CHECK(rc.n_u == 100);  // 2nr
  CHECK(rc.n_v == 80);   // 4ln
  CHECK(rc.n_q == 260);  // 2 N_V + N_U
  CHECK(rc.circuits_h == 46);
  CHECK(rc.n_h == 3720);
  CHECK(rc.n_h1 + rc.n_h2 == rc.n_h);
}

TEST_CASE("ansatz gate count matches the parameter count") {
  CHECK(count_resources(4, 3, 1).n_v == 48);
}

TEST_CASE("structural identities hold across the grid") {
  for (int n = 3; n <= 10; ++n) {
    for (int l = 1; l <= 6; ++l) {
      for (int r : {1, 4, 16}) {
        const ResourceCount rc = count_resources(n, l, r);
        CHECK(rc.n_u == 2LL * n * r);
        CHECK(rc.n_v == 4LL * l * n);
        CHECK(rc.n_q == 2 * rc.n_v + rc.n_u);
        CHECK(rc.n_h == rc.n_h1 + rc.n_h2);
        // The closed forms assume all pairwise bond products are distinct
        // strings; on the 4-ring opposite bonds collide, so n = 4 counts
        // three circuits fewer than the formulas.
        if (n == 4) continue;
        CHECK(rc.circuits_h == 2LL * n + (2LL * n * n - 3 * n + 1));
        // Enumerated total reproduces the closed form
        // (4l - 2)(n - n^2) + 8 l n^3.
        CHECK(rc.n_h ==
              (4LL * l - 2) * (n - static_cast<std::int64_t>(n) * n) +
                  8LL * l * n * n * n);
      }
    }
  }
}

TEST_CASE("enumeration convention: one basis-change gate per X factor") {
  // Measuring <H> takes one circuit per stored term, each with 4ln ansatz
  // gates, plus one Hadamard per X factor; for the n-site chain that sums
  // to 2n * 4ln + n = 8ln^2 + n gates.
  for (int n = 3; n <= 8; ++n) {
    for (int l = 1; l <= 4; ++l) {
      CHECK(count_resources(n, l, 1).n_h1 == 8LL * l * n * n + n);
    }
  }
}

TEST_CASE("squared-sum circuit count backs the N_H2 closed form") {
  // (2n^2 - 3n + 1) stored terms incl. the identity; closed form
  // (-3 + 4l) n + (2 - 12l) n^2 + 8 l n^3.
  for (int n = 6; n <= 10; ++n) {
    for (int l = 1; l <= 4; ++l) {
      CHECK(count_resources(n, l, 1).n_h2 ==
            (-3LL + 4 * l) * n + (2LL - 12 * l) * n * n + 8LL * l * n * n * n);
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(count_resources(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_resources(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_resources(5, 3, 0), std::invalid_argument);
}

TEST_CASE("crossover report") {
  SUBCASE("linear Trotter scaling keeps the echo circuit cheaper") {
    const CrossoverReport report = crossover(6, 12, 3, 1.0);
    for (const CrossoverRow& row : report.rows) {
      CHECK(row.n_q < row.n_h);
    }
    CHECK(report.first_n_with_nq_below == 6);
  }
  SUBCASE("cubic Trotter scaling eventually loses") {
    const CrossoverReport report = crossover(3, 30, 3, 3.0);
    bool exceeded = false;
    for (const CrossoverRow& row : report.rows) {
      exceeded = exceeded || row.n_q > row.n_h;
    }
    CHECK(exceeded);
  }
  SUBCASE("zero layers is rejected") {
    CHECK_THROWS_AS(crossover(3, 10, 0, 1.0), std::invalid_argument);
  }
}
