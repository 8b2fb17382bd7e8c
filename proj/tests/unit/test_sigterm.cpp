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

#include "pivcat/errors.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/random.hpp"
#include "pivcat/term.hpp"

namespace pivcat {
namespace {

Term snake_left() {
  // (P⊗evl)(cvl⊗P) : P -> P
  Term cvl = Term::gen("cvl", {}, {"P", "Q"});
  Term evl = Term::gen("evl", {"Q", "P"}, {});
  return compose(tensor(Term::id({"P"}), evl), tensor(cvl, Term::id({"P"})));
}

EvalAssignment scalar_pair(const Scalar& q) {
  PivotalPair pp = from_matrix(1, Matrix::scalar(q));
  EvalAssignment a;
  a.objects = {{"P", 1}, {"Q", 1}};
  a.morphisms = {{"cvl", pp.cvl}, {"evl", pp.evl},
                 {"cvr", pp.cvr}, {"evr", pp.evr}};
  return a;
}

TEST(Term, ComposeWithIdentityIsUnchanged) {
  Term f = Term::gen("f", {"A"}, {"B"});
  EvalAssignment a;
  a.objects = {{"A", 2}, {"B", 3}};
  Rng rng(1);
  a.morphisms["f"] = random_matrix(rng, 3, 2, 4, true);
  EXPECT_EQ(evaluate(compose(Term::id({"B"}), f), a), evaluate(f, a));
  EXPECT_EQ(evaluate(compose(f, Term::id({"A"})), a), evaluate(f, a));
}

TEST(Term, BoundaryMismatchThrows) {
  Term f = Term::gen("f", {"A"}, {"B"});
  Term g = Term::gen("g", {"C"}, {"D"});
  EXPECT_THROW(compose(g, f), TypeMismatch);
}

TEST(Term, UnassignedGeneratorThrows) {
  EvalAssignment a;
  a.objects = {{"A", 1}};
  EXPECT_THROW(evaluate(Term::gen("f", {"A"}, {"A"}), a), UnassignedGenerator);
}

TEST(Term, IllShapedValueThrows) {
  EvalAssignment a;
  a.objects = {{"A", 2}};
  a.morphisms["f"] = Matrix::identity(3);
  EXPECT_THROW(evaluate(Term::gen("f", {"A"}, {"A"}), a), ShapeMismatch);
}

TEST(Term, IdentityOfUnitIsOneByOne) {
  EXPECT_EQ(evaluate(Term::id({}), EvalAssignment{}), Matrix::identity(1));
}

TEST(Term, LeftSnakeEvaluatesToOne) {
  for (long q : {1, 2, -5}) {
    EXPECT_EQ(evaluate(snake_left(), scalar_pair(Scalar(q))),
              Matrix::identity(1));
  }
}

TEST(Term, RightSnakeUsesTheTwist) {
  Term cvr = Term::gen("cvr", {}, {"Q", "P"});
  Term evr = Term::gen("evr", {"P", "Q"}, {});
  Term snake =
      compose(tensor(evr, Term::id({"P"})), tensor(Term::id({"P"}), cvr));
  EXPECT_EQ(evaluate(snake, scalar_pair(Scalar(3, 4))), Matrix::identity(1));
  EvalAssignment broken = scalar_pair(Scalar(3));
  broken.morphisms["evr"] = broken.morphisms["evr"] * Scalar(2);
  EXPECT_EQ(evaluate(snake, broken), Matrix::scalar(Scalar(2)));
}

TEST(Term, EvaluationIsFunctorial) {
  Rng rng(2);
  Term f = Term::gen("f", {"A"}, {"B"});
  Term g = Term::gen("g", {"B"}, {"C"});
  Term h = Term::gen("h", {"C"}, {"A"});
  Term k = Term::gen("k", {"A"}, {"C"});
  EvalAssignment a;
  a.objects = {{"A", 2}, {"B", 1}, {"C", 3}};
  for (int i = 0; i < 10; ++i) {
    a.morphisms = {{"f", random_matrix(rng, 1, 2, 3, true)},
                   {"g", random_matrix(rng, 3, 1, 3, true)},
                   {"h", random_matrix(rng, 2, 3, 3, true)},
                   {"k", random_matrix(rng, 3, 2, 3, true)}};
    EXPECT_EQ(evaluate(compose(g, f), a),
              a.morphisms["g"] * a.morphisms["f"]);
    EXPECT_EQ(evaluate(tensor(f, h), a),
              kron(a.morphisms["f"], a.morphisms["h"]));
    // (g⊗h)(f⊗k) = (gf)⊗(hk)
    EXPECT_EQ(evaluate(compose(tensor(g, h), tensor(f, k)), a),
              evaluate(tensor(compose(g, f), compose(h, k)), a));
  }
}

TEST(Term, TensorWithUnitIdentityIsNeutral) {
  Term f = Term::gen("f", {"A"}, {"A"});
  EvalAssignment a;
  a.objects = {{"A", 2}};
  a.morphisms["f"] = Matrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(evaluate(tensor(Term::id({}), f), a), a.morphisms["f"]);
  EXPECT_EQ(tensor(Term::id({}), f).source(), ObjectWord{"A"});
}

TEST(Term, JsonRoundTrip) {
  Term t = snake_left();
  Term back = term_from_json(term_to_json(t));
  EXPECT_EQ(back.to_string(), t.to_string());
  EXPECT_EQ(evaluate(back, scalar_pair(Scalar(7))), Matrix::identity(1));
}

TEST(Term, JsonSignatureSuppliesBoundaries) {
  auto j = nlohmann::json::parse(R"({"op":"gen","name":"f"})");
  EXPECT_THROW(term_from_json(j), InputError);
  Term t = term_from_json(j, {{"f", {{"A"}, {"B", "B"}}}});
  EXPECT_EQ(t.target(), (ObjectWord{"B", "B"}));
}

TEST(Term, GeneratorsInFirstOccurrenceOrder) {
  EXPECT_EQ(generators_of(snake_left()),
            (std::vector<std::string>{"evl", "cvl"}));
}

}  // namespace
}  // namespace pivcat
