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

#include <set>

#include "pivcat/errors.hpp"
#include "pivcat/hopf_verify.hpp"
#include "pivcat/intertwiner.hpp"
#include "pivcat/module_correspondence.hpp"
#include "pivcat/presentation.hpp"
#include "pivcat/random.hpp"
#include "pivcat/rewriting.hpp"

namespace pivcat {
namespace {

// n = 1 letters: f = 0, e = 1.
const Word kF(1, '\0');
const Word kE(1, '\1');

NCPoly word(const Word& w) { return NCPoly::monomial(w); }

Presentation scalar_presentation(const Scalar& q) {
  return build_presentation(1, Matrix::scalar(q));
}

TEST(NCPoly, CombinesAndDropsZeros) {
  NCPoly p = word(kF) + word(kE) - word(kF);
  EXPECT_EQ(p, word(kE));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((word(kF) * word(kE)).terms().begin()->first, kF + kE);
  EXPECT_EQ((NCPoly::constant(3) * word(kF)).coeff(kF), Scalar(3));
}

TEST(NCPoly, DegLexLeadingWord) {
  NCPoly p = word(kE + kF) + word(kF + kE) + NCPoly::constant(1);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.leading_word(), kE + kF);
}

TEST(TensorPoly, MultipliesLegwise) {
  TensorPoly a, b;
  a.add_term(kF, kE, Scalar(2));
  b.add_term(kE, kF, Scalar(3));
  TensorPoly c = a * b;
  ASSERT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.terms().begin()->first, std::make_pair(kF + kE, kE + kF));
  EXPECT_EQ(c.terms().begin()->second, Scalar(6));
}

TEST(Presentation, IdentityTwistOnOneGenerator) {
  Presentation p = scalar_presentation(1);
  EXPECT_EQ(p.alphabet_size(), 2u);
  EXPECT_EQ(p.names, (std::vector<std::string>{"f[1][1]", "e[1][1]"}));
  std::set<std::string> rels;
  for (const NCPoly& r : p.relations) rels.insert(r.to_string(p.names));
  EXPECT_EQ(p.relations.size(), 4u);
  NCPoly fe = word(kF + kE) - NCPoly::constant(1);
  NCPoly ef = word(kE + kF) - NCPoly::constant(1);
  for (const NCPoly& r : p.relations) EXPECT_TRUE(r == fe || r == ef);
  TensorPoly ff, ee;
  ff.add_term(kF, kF, 1);
  ee.add_term(kE, kE, 1);
  EXPECT_EQ(p.delta[0], ff);
  EXPECT_EQ(p.delta[1], ee);
  EXPECT_EQ(p.counit[0], Scalar(1));
  EXPECT_EQ(p.counit[1], Scalar(1));
  EXPECT_EQ(p.antipode[0], word(kE));
  EXPECT_EQ(p.antipode[1], word(kF));
}

TEST(Presentation, ScalarTwistSubstitutesInverse) {
  Scalar q(5);
  Presentation p = scalar_presentation(q);
  NCPoly fe = word(kF + kE) - NCPoly::constant(q.inverse());
  NCPoly ef = q * word(kE + kF) - NCPoly::constant(1);
  EXPECT_EQ(p.relations[0], fe);
  EXPECT_EQ(p.relations[1], fe);
  EXPECT_EQ(p.relations[2], ef);
  EXPECT_EQ(p.relations[3], ef);
  EXPECT_EQ(p.counit[0], q.inverse());
  EXPECT_EQ(p.antipode[1], q * word(kF));
  EXPECT_EQ(p.antipode[0], q.inverse() * word(kE));
}

TEST(Presentation, CountsForTwoByTwo) {
  Presentation p = build_presentation(2, Matrix::identity(2));
  EXPECT_EQ(p.alphabet_size(), 8u);
  EXPECT_EQ(p.relations.size(), 16u);
  EXPECT_EQ(p.names[p.e(0, 1)], "e[1][2]");
  EXPECT_EQ(p.names[p.f(1, 0)], "f[2][1]");
}

TEST(Presentation, SingularTwistThrows) {
  EXPECT_THROW(build_presentation(2, Matrix(2, 2)), SingularMatrix);
}

TEST(Presentation, CoalgebraOnGenerators) {
  Matrix q = Matrix::from_rows({{1, 1}, {0, 1}});
  Presentation p = build_presentation(2, q);
  for (std::size_t a = 0; a < p.alphabet_size(); ++a) {
    Word w(1, static_cast<char>(a));
    TensorPoly d = p.delta_of(w);
    // (ε⊗id)Δ and (id⊗ε)Δ on a generator
    NCPoly left, right;
    for (const auto& [k, c] : d.terms()) {
      left += NCPoly::monomial(k.second, c * p.counit_of(k.first));
      right += NCPoly::monomial(k.first, c * p.counit_of(k.second));
    }
    EXPECT_EQ(left, word(w));
    EXPECT_EQ(right, word(w));
  }
}

TEST(Presentation, JsonExportShape) {
  auto j = presentation_to_json(build_presentation(2, Matrix::identity(2)));
  for (const char* key :
       {"n", "Q", "generators", "relations", "delta", "counit", "antipode"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["generators"].size(), 8u);
  EXPECT_EQ(j["relations"].size(), 16u);
}

TEST(Complete, OneGeneratorGivesTwoRules) {
  for (Scalar q : {Scalar(1), Scalar(2), Scalar(1, 3)}) {
    RewriteSystem rs = complete(scalar_presentation(q), 4);
    ASSERT_EQ(rs.rules().size(), 2u);
    std::set<Word> lhs;
    for (const Rule& r : rs.rules()) {
      lhs.insert(r.lhs);
      EXPECT_EQ(r.rhs.degree(), 0u);
    }
    EXPECT_EQ(lhs, (std::set<Word>{kF + kE, kE + kF}));
    EXPECT_EQ(rs.status(), RewriteSystem::Status::kComplete);
  }
}

TEST(Complete, RulesDecreaseInDegLex) {
  RewriteSystem rs = complete(build_presentation(2, Matrix::identity(2)), 4);
  EXPECT_GT(rs.rules().size(), 0u);
  DegLex lt;
  for (const Rule& r : rs.rules()) {
    for (const auto& [w, c] : r.rhs.terms()) EXPECT_TRUE(lt(w, r.lhs));
  }
}

TEST(Complete, NeedsDegreeTwo) {
  EXPECT_THROW(complete(scalar_presentation(1), 1), Error);
}

TEST(NormalForm, OneGenerator) {
  RewriteSystem rs = complete(scalar_presentation(1), 4);
  EXPECT_EQ(normal_form(word(kF + kE), rs), NCPoly::constant(1));
  EXPECT_EQ(normal_form(NCPoly::constant(1), rs), NCPoly::constant(1));
  EXPECT_EQ(normal_form(word(kF + kE + kF), rs), word(kF));
  EXPECT_EQ(normal_form(word(kE + kF + kE), rs), word(kE));
  EXPECT_THROW(normal_form(word(kF + kF + kF + kF + kF), rs), DegreeExceeded);
}

TEST(NormalForm, ScalarTwistCoefficients) {
  RewriteSystem rs = complete(scalar_presentation(2), 4);
  EXPECT_EQ(normal_form(word(kF + kE), rs), NCPoly::constant(Scalar(1, 2)));
  EXPECT_EQ(normal_form(word(kE + kF), rs), NCPoly::constant(Scalar(1, 2)));
}

TEST(NormalWords, LaurentPattern) {
  RewriteSystem rs = complete(scalar_presentation(1), 4);
  // 1, f, e, ff, ee, ... : two per positive degree.
  for (std::size_t d = 0; d <= 4; ++d) {
    EXPECT_EQ(normal_words(rs, d).size(), 2 * d + 1);
  }
}

TEST(VerifyHopf, OneGenerator) {
  for (Scalar q : {Scalar(1), Scalar(2), Scalar(1, 3)}) {
    Report r = verify_hopf(scalar_presentation(q), 4);
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  }
  Report id = verify_hopf(scalar_presentation(1), 4);
  ASSERT_NE(id.find("(e) S² = id"), nullptr);
  EXPECT_TRUE(id.find("(e) S² = id")->passed);
}

TEST(VerifyHopf, SquaredAntipodeOnScalarTwist) {
  Presentation p = scalar_presentation(2);
  EXPECT_EQ(p.antipode_of(p.antipode_of(kE)), word(kE));
  EXPECT_EQ(p.antipode_of(p.antipode_of(kF)), word(kF));
}

TEST(VerifyHopf, TwoByTwoIdentity) {
  Report r = verify_hopf(build_presentation(2, Matrix::identity(2)), 3);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
}

TEST(VerifyHopf, DetectsBrokenCounit) {
  Presentation p = scalar_presentation(1);
  p.counit[0] = Scalar(2);
  EXPECT_FALSE(verify_hopf(p, 3).passed());
}

TEST(Module, UnitObjectIsTrivialModule) {
  Matrix q = Matrix::from_rows({{2, 1}, {1, 1}});
  Presentation pres = build_presentation(2, q);
  ModuleAction m = action_from_intertwiner(unit_object(from_matrix(2, q)), pres);
  for (std::size_t a = 0; a < pres.alphabet_size(); ++a) {
    EXPECT_EQ(m.act[a], Matrix::scalar(pres.counit[a]));
  }
  EXPECT_TRUE(intertwiner_from_action(m, pres).sigma.is_identity());
}

TEST(Module, ScalarObject) {
  Presentation pres = scalar_presentation(1);
  Intertwiner obj{1, Matrix::scalar(Scalar(3)), from_matrix(1, Matrix::identity(1))};
  ModuleAction m = action_from_intertwiner(obj, pres);
  EXPECT_EQ(m.act[pres.e(0, 0)], Matrix::scalar(Scalar(3)));
  EXPECT_EQ(m.act[pres.f(0, 0)], Matrix::scalar(Scalar(1, 3)));
  EXPECT_EQ(intertwiner_from_action(m, pres).sigma, obj.sigma);
}

TEST(Module, RandomRoundTrips) {
  Rng rng(51);
  for (int i = 0; i < 15; ++i) {
    std::size_t n = 1 + i % 2;
    Matrix q = random_invertible(rng, n, 3, true);
    Presentation pres = build_presentation(n, q);
    Intertwiner obj = random_object(rng, from_matrix(n, q), 1 + i % 3);
    ModuleAction m = action_from_intertwiner(obj, pres);
    EXPECT_TRUE(check_relations(m, pres).passed());
    Intertwiner back = intertwiner_from_action(m, pres);
    EXPECT_EQ(back.sigma, obj.sigma);
    ModuleAction again = action_from_intertwiner(back, pres);
    EXPECT_EQ(again.act, m.act);
  }
}

TEST(Module, WrongPairIsInvalidObject) {
  Presentation pres = scalar_presentation(2);
  Intertwiner obj{1, Matrix::scalar(Scalar(3)), from_matrix(1, Matrix::identity(1))};
  EXPECT_THROW(action_from_intertwiner(obj, pres), InvalidObject);
}

TEST(Module, ViolatedRelationIsRejected) {
  Presentation pres = scalar_presentation(1);
  ModuleAction m;
  m.dimX = 1;
  m.act = {Matrix::scalar(Scalar(2)), Matrix::scalar(Scalar(2))};
  EXPECT_FALSE(check_relations(m, pres).passed());
  EXPECT_THROW(intertwiner_from_action(m, pres), RelationViolated);
}

TEST(Module, MorphismsAreModuleMaps) {
  Rng rng(52);
  for (int i = 0; i < 10; ++i) {
    Matrix q = random_invertible(rng, 2, 2, true);
    PivotalPair pp = from_matrix(2, q);
    Presentation pres = build_presentation(2, q);
    Intertwiner a = random_object(rng, pp, 2);
    Intertwiner b = random_object(rng, pp, 1 + i % 2);
    ModuleAction ma = action_from_intertwiner(a, pres);
    ModuleAction mb = action_from_intertwiner(b, pres);
    for (const Matrix& f : morphism_basis(a, b)) {
      EXPECT_TRUE(is_module_map(f, ma, mb));
    }
    Matrix g = random_matrix(rng, b.dimX, a.dimX, 3, true);
    EXPECT_EQ(is_morphism(g, a, b), is_module_map(g, ma, mb));
  }
}

}  // namespace
}  // namespace pivcat
