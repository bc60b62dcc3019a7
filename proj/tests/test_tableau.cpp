// Copyright 2026 The cliffsynth Authors
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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cliffsynth/tableau.hpp"
#include "test_util.hpp"

namespace cliffsynth {
namespace {

using testing::random_circuit;

CliffordTableau apply_all(CliffordTableau t, const Circuit& c) {
  for (const Gate& g : c.gates()) t.append(g);
  return t;
}

TEST(Tableau, IdentityLayout) {
  const CliffordTableau t(3);
  EXPECT_TRUE(t.table_is_identity());
  EXPECT_TRUE(t.signs().none());
  EXPECT_TRUE(t.x(t.destab_row(1), 1));
  EXPECT_TRUE(t.z(t.stab_row(2), 2));
  EXPECT_FALSE(t.z(t.destab_row(1), 1));
  EXPECT_THROW(CliffordTableau(0), std::invalid_argument);
}

TEST(Tableau, HadamardSwapsXAndZ) {
  CliffordTableau t(1);
  t.append(Gate::h(0));
  EXPECT_TRUE(t.z(0, 0));
  EXPECT_FALSE(t.x(0, 0));
  EXPECT_TRUE(t.x(1, 0));
  EXPECT_FALSE(t.z(1, 0));
  EXPECT_TRUE(t.signs().none());
}

TEST(Tableau, PhaseMapsXToY) {
  CliffordTableau t(1);
  t.append(Gate::s(0));
  EXPECT_TRUE(t.x(0, 0));
  EXPECT_TRUE(t.z(0, 0));
  EXPECT_FALSE(t.sign(0));
  t.append(Gate::s(0));
  // S S = Z sends X to -X.
  EXPECT_TRUE(t.x(0, 0));
  EXPECT_FALSE(t.z(0, 0));
  EXPECT_TRUE(t.sign(0));
  EXPECT_FALSE(t.sign(1));
}

TEST(Tableau, ZThenXFlipsBothSigns) {
  // S S H S S H = X Z, which is proportional to Y and so negates X and Z.
  CliffordTableau t(1);
  for (const Gate& g : {Gate::s(0), Gate::s(0), Gate::h(0), Gate::s(0), Gate::s(0), Gate::h(0)}) {
    t.append(g);
  }
  EXPECT_TRUE(t.table_is_identity());
  EXPECT_TRUE(t.sign(0));
  EXPECT_TRUE(t.sign(1));
}

TEST(Tableau, CnotPropagation) {
  CliffordTableau t(2);
  t.append(Gate::cx(0, 1));
  // X0 -> X0 X1, Z1 -> Z0 Z1.
  EXPECT_TRUE(t.x(0, 0));
  EXPECT_TRUE(t.x(0, 1));
  EXPECT_TRUE(t.z(t.stab_row(1), 0));
  EXPECT_TRUE(t.z(t.stab_row(1), 1));
  EXPECT_FALSE(t.x(1, 0));
  EXPECT_TRUE(t.x(1, 1));
}

TEST(Tableau, AgreesWithStimFixtures) {
  const auto cases = testing::stim_cases();
  ASSERT_EQ(cases.size(), 60u);
  for (std::size_t k = 0; k < cases.size(); ++k) {
    EXPECT_EQ(from_circuit(cases[k].circuit), cases[k].tableau) << "fixture case " << k;
  }
}

TEST(Tableau, PrependInReverseEqualsAppend) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Circuit c = random_circuit(n, 1 + rng() % 60, rng);
    CliffordTableau t(n);
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) t.prepend(*it);
    ASSERT_EQ(t, from_circuit(c)) << "trial " << trial;
  }
}

TEST(Tableau, ComposeMatchesConcatenation) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Circuit a = random_circuit(n, rng() % 40, rng);
    const Circuit b = random_circuit(n, rng() % 40, rng);
    Circuit ab = a;
    ab.append(b);
    ASSERT_EQ(compose(from_circuit(a), from_circuit(b)), from_circuit(ab)) << "trial " << trial;
  }
}

TEST(Tableau, InverseIsTwoSided) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Circuit c = random_circuit(n, rng() % 80, rng);
    const CliffordTableau t = from_circuit(c);
    const CliffordTableau inv = inverse(t);
    ASSERT_EQ(compose(t, inv), CliffordTableau(n)) << "trial " << trial;
    ASSERT_EQ(compose(inv, t), CliffordTableau(n)) << "trial " << trial;
    ASSERT_EQ(inv, from_circuit(inverse_circuit(c))) << "trial " << trial;
  }
}

TEST(Tableau, AppendedGatesThenInverseCancel) {
  std::mt19937 rng(14);
  const Circuit c = random_circuit(5, 100, rng);
  EXPECT_EQ(apply_all(CliffordTableau(5), append_inverse(c)), CliffordTableau(5));
}

// Pairwise commutation of the rows, straight from the definition.
bool commutation_ok(const CliffordTableau& t) {
  const std::size_t n = t.num_qubits();
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      bool anti = false;
      for (std::size_t q = 0; q < n; ++q) {
        anti ^= (t.x(a, q) && t.z(b, q)) != (t.z(a, q) && t.x(b, q));
      }
      if (anti != (b == a + n)) return false;
    }
  }
  return true;
}

TEST(Tableau, SymplecticCheck) {
  std::mt19937 rng(15);
  int broken = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    CliffordTableau t = from_circuit(random_circuit(n, 50, rng));
    EXPECT_TRUE(is_symplectic(t));
    const std::size_t r = rng() % (2 * n), c = rng() % (2 * n);
    t.mutable_table().flip(r, c);
    EXPECT_EQ(is_symplectic(t), commutation_ok(t));
    broken += !commutation_ok(t);
  }
  EXPECT_GT(broken, 50);
}

TEST(Tableau, TextRoundTrip) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const CliffordTableau t = from_circuit(random_circuit(n, 40, rng));
    EXPECT_EQ(parse_tableau(to_text(t)), t);
  }
}

TEST(Tableau, TextFormat) {
  CliffordTableau t(2);
  t.append(Gate::h(1));
  t.append(Gate::s(1));
  t.append(Gate::s(1));
  EXPECT_EQ(to_text(t), "n=2\n1000 +\n0001 +\n0010 +\n0100 -\n");
  EXPECT_EQ(parse_tableau("n=2\n10000\n00010\n00100\n01001\n"), t);
}

TEST(Tableau, ParseRejectsMalformedText) {
  EXPECT_THROW(parse_tableau(""), std::runtime_error);
  EXPECT_THROW(parse_tableau("n=2\n1000 +\n0100 +\n"), std::runtime_error);
  EXPECT_THROW(parse_tableau("n=1\n12 +\n01 +\n"), std::runtime_error);
  EXPECT_THROW(parse_tableau("n=1\n10 *\n01 +\n"), std::runtime_error);
}

TEST(Tableau, GateOutOfRangeThrows) {
  CliffordTableau t(2);
  EXPECT_THROW(t.append(Gate::h(2)), std::invalid_argument);
  EXPECT_THROW(t.prepend(Gate::cx(0, 0)), std::invalid_argument);
}

}  // namespace
}  // namespace cliffsynth
