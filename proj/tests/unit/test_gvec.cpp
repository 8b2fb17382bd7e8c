// Copyright 2026 The pivcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "pivcat/errors.hpp"
#include "pivcat/finite_group.hpp"
#include "pivcat/graded.hpp"
#include "pivcat/gvec.hpp"
#include "pivcat/intertwiner.hpp"

namespace pivcat {
namespace {

// S3 element indices.
constexpr Element kE = 0, k12 = 1, k13 = 2, k23 = 3, k123 = 4, k132 = 5;

TEST(FiniteGroup, SymmetricTableMatchesPermutations) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  oracle::GroupTable ref = oracle::s3_table();
  ASSERT_EQ(s3.order(), 6u);
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(s3.mul(a, b), ref.mul[a][b]);
  }
  EXPECT_EQ(s3.mul(k13, k12), k132);
  EXPECT_EQ(s3.mul(k12, k23), k132);
  EXPECT_EQ(s3.inverse(k123), k132);
  EXPECT_EQ(s3.index_of("(123)"), k123);
}

TEST(FiniteGroup, CyclicTable) {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  EXPECT_EQ(z6.mul(4, 5), 3u);
  EXPECT_EQ(z6.inverse(2), 4u);
  EXPECT_EQ(z6.name(3), "3");
  EXPECT_THROW(z6.index_of("7"), ElementNotInGroup);
}

TEST(FiniteGroup, RejectsBrokenTable) {
  EXPECT_THROW(FiniteGroup({"a", "b"}, {{0, 1}, {0, 1}}), InputError);
  EXPECT_THROW(FiniteGroup({"a", "b"}, {{0, 1}}), InputError);
}

TEST(FiniteGroup, JsonRoundTrip) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  FiniteGroup back = group_from_json(group_to_json(s3));
  EXPECT_EQ(back.names(), s3.names());
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) EXPECT_EQ(back.mul(a, b), s3.mul(a, b));
}

TEST(FiniteGroup, ConjugationOrbits) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  using Orbits = std::vector<std::vector<Element>>;
  EXPECT_EQ(s3.conjugation_orbits(k123),
            (Orbits{{kE}, {k12, k13, k23}, {k123}, {k132}}));
  EXPECT_EQ(s3.conjugation_orbits(k12),
            (Orbits{{kE}, {k12}, {k13, k23}, {k123, k132}}));
  EXPECT_EQ(FiniteGroup::cyclic(2).conjugation_orbits(1), (Orbits{{0}, {1}}));
}

TEST(GradedPair, IdentityAndInverseGrades) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedPair e = graded_pair(s3, kE);
  EXPECT_EQ(e.q.grades, std::vector<Element>{kE});
  EXPECT_TRUE(check_graded_pair(s3, e).passed());
  GradedPair z2 = graded_pair(FiniteGroup::cyclic(2), 1);
  EXPECT_EQ(z2.q.grades, std::vector<Element>{1});
  GradedPair c = graded_pair(s3, k123);
  EXPECT_EQ(c.p.grades, std::vector<Element>{k123});
  EXPECT_EQ(c.q.grades, std::vector<Element>{k132});
  EXPECT_TRUE(check_graded_pair(s3, c).passed());
  EXPECT_THROW(graded_pair(s3, 6), ElementNotInGroup);
}

TEST(GradedMatrix, OffGradeEntryThrows) {
  GradedSpace a{{0, 1}}, b{{1, 0}};
  EXPECT_THROW(GradedMatrix(a, a, Matrix::from_rows({{1, 1}, {0, 1}})),
               GradeMismatch);
  GradedMatrix m(a, b, Matrix::from_rows({{0, 2}, {3, 0}}));
  EXPECT_EQ(m.block(0), Matrix::scalar(Scalar(3)));
  EXPECT_EQ(m.block(1), Matrix::scalar(Scalar(2)));
  EXPECT_EQ(m.dense(), Matrix::from_rows({{0, 2}, {3, 0}}));
}

TEST(GradedMatrix, TensorGrades) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedSpace t = tensor_spaces(s3, GradedSpace{{k12, k13}}, GradedSpace{{k23}});
  EXPECT_EQ(t.grades, (std::vector<Element>{s3.mul(k12, k23), s3.mul(k13, k23)}));
}

TEST(Intertwiner, CommutingGradeIsValid) {
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  GradedObject obj{{{2, 1}}};
  GradedMatrix s = graded_sigma(z6, 5, obj, Matrix::scalar(Scalar(-3)));
  EXPECT_TRUE(validate_graded_intertwiner(z6, 5, obj, s).passed());
}

TEST(Intertwiner, NonCommutingSingletonIsInvalid) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedObject obj{{{k13, 1}}};
  EXPECT_NE(intertwining_source(s3, k12, obj), intertwining_target(s3, k12, obj));
  EXPECT_THROW(graded_sigma(s3, k12, obj, Matrix::scalar(Scalar(1))),
               GradeMismatch);
  GradedMatrix zero = graded_sigma(s3, k12, obj, Matrix(1, 1));
  EXPECT_FALSE(validate_graded_intertwiner(s3, k12, obj, zero).passed());
  EXPECT_FALSE(admits_graded_iso(s3, k12, obj));
  EXPECT_FALSE(orbit_support_check(s3, k12, obj));
}

TEST(Intertwiner, OrbitPairWithSwap) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedObject obj{{{k13, 1}, {k23, 1}}};
  EXPECT_EQ(intertwining_source(s3, k12, obj).grades,
            (std::vector<Element>{k132, k123}));
  EXPECT_EQ(intertwining_target(s3, k12, obj).grades,
            (std::vector<Element>{k123, k132}));
  Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  GradedMatrix s = graded_sigma(s3, k12, obj, swap);
  EXPECT_TRUE(validate_graded_intertwiner(s3, k12, obj, s).passed());
  EXPECT_TRUE(orbit_support_check(s3, k12, obj));
  EXPECT_EQ(orbit_permutation(s3, k12, obj).dense(), swap);
}

TEST(Intertwiner, CentralElementAcceptsEverything) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedObject obj{{{k12, 2}, {k123, 1}}};
  EXPECT_TRUE(orbit_support_check(s3, kE, obj));
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  GradedObject any{{{1, 1}, {4, 3}}};
  for (Element g = 0; g < 6; ++g) EXPECT_TRUE(orbit_support_check(z6, g, any));
}

// Every multiplicity vector with total dimension at most max_dim.
void for_each_object(std::size_t order, std::size_t max_dim,
                     const std::function<void(const GradedObject&)>& body) {
  std::vector<std::size_t> m(order, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t left) {
    if (i == order) {
      GradedObject obj;
      for (std::size_t h = 0; h < order; ++h) {
        if (m[h]) obj.multiplicity[h] = m[h];
      }
      if (!obj.multiplicity.empty()) body(obj);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      m[i] = k;
      rec(i + 1, left - k);
    }
    m[i] = 0;
  };
  rec(0, max_dim);
}

void check_existence(const FiniteGroup& G, const oracle::GroupTable& ref,
                     std::size_t max_dim) {
  for (Element g = 0; g < G.order(); ++g) {
    for_each_object(G.order(), max_dim, [&](const GradedObject& obj) {
      bool want = oracle::graded_iso_exists(ref, g, obj.multiplicity);
      EXPECT_EQ(admits_graded_iso(G, g, obj), want);
      EXPECT_EQ(orbit_support_check(G, g, obj), want);
      if (want) {
        EXPECT_TRUE(validate_graded_intertwiner(
                        G, g, obj, orbit_permutation(G, g, obj))
                        .passed());
      }
    });
  }
}

TEST(Existence, MatchesGradeCounting) {
  check_existence(FiniteGroup::symmetric3(), oracle::s3_table(), 3);
  check_existence(FiniteGroup::cyclic(6), oracle::cyclic_table(6), 2);
  check_existence(FiniteGroup::cyclic(2), oracle::cyclic_table(2), 4);
}

TEST(Enumerate, CyclicTwoHasEverySupport) {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  // Multiplicity pairs (a, b) with 1 <= a + b <= 3: nine of them.
  for (Element g = 0; g < 2; ++g) {
    auto all = enumerate_supports(z2, g, 3);
    EXPECT_EQ(all.size(), 9u);
    for (const auto& e : all) EXPECT_TRUE(e.valid && e.orbit_closed);
  }
}

TEST(Enumerate, SymmetricOrbitSizes) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  auto all = enumerate_supports(s3, k123, 3);
  bool saw_transpositions = false;
  for (const auto& e : all) {
    EXPECT_TRUE(e.valid);
    EXPECT_TRUE(e.orbit_closed);
    EXPECT_LE(e.object.dim(), 3u);
    if (e.object.multiplicity.count(k12)) {
      saw_transpositions = true;
      EXPECT_EQ(e.object.multiplicity.count(k13), 1u);
      EXPECT_EQ(e.object.multiplicity.count(k23), 1u);
    }
  }
  EXPECT_TRUE(saw_transpositions);
}

TEST(Enumerate, SortedAndDeterministic) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  auto a = enumerate_supports(s3, k12, 4);
  auto b = enumerate_supports(s3, k12, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].object.space(), b[i].object.space());
    if (i) {
      EXPECT_LT(a[i - 1].object.space().grades, a[i].object.space().grades);
    }
  }
}

TEST(GradedObject, JsonUsesNames) {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  GradedObject obj{{{k13, 2}}};
  auto j = obj.to_json(s3);
  EXPECT_NE(j.dump().find("(13)"), std::string::npos);
  EXPECT_EQ(obj.dim(), 2u);
}

}  // namespace
}  // namespace pivcat
