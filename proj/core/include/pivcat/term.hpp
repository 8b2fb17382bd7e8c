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

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/errors.hpp"
#include "pivcat/matrix.hpp"

namespace pivcat {

/** Object of the free strict monoidal category; empty means the unit. */
using ObjectWord = std::vector<std::string>;

std::string word_string(const ObjectWord& w);
ObjectWord concat(const ObjectWord& a, const ObjectWord& b);

/**
 * Immutable expression tree for a morphism of the free strict monoidal
 * category over named generators. Cheap to copy.
 */
class Term {
 public:
  enum class Kind { kId, kGen, kCompose, kTensor };

  static Term id(ObjectWord w);
  static Term gen(std::string name, ObjectWord source, ObjectWord target);

  Kind kind() const { return node_->kind; }
  const ObjectWord& source() const { return node_->source; }
  const ObjectWord& target() const { return node_->target; }
  /** Generator name; empty for other kinds. */
  const std::string& name() const { return node_->name; }
  /** Children of compose/tensor nodes. For compose, lhs acts last. */
  const Term& lhs() const { return node_->children.at(0); }
  const Term& rhs() const { return node_->children.at(1); }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    ObjectWord source, target;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Term compose(const Term&, const Term&);
  friend Term tensor(const Term&, const Term&);
  std::shared_ptr<const Node> node_;
};

/** t1 after t2; throws TypeMismatch unless target(t2) == source(t1). */
Term compose(const Term& t1, const Term& t2);
Term tensor(const Term& t1, const Term& t2);

/** Names of all generators occurring in t, in first-occurrence order. */
std::vector<std::string> generators_of(const Term& t);

/**
 * Structural recursion shared by every concrete model. A Model supplies
 * identity(word), gen(term), compose(a, b) and tensor(a, b).
 */
template <class Model>
auto evaluate_with(const Term& t, const Model& model)
    -> decltype(model.identity(ObjectWord{})) {
  switch (t.kind()) {
    case Term::Kind::kId:
      return model.identity(t.source());
    case Term::Kind::kGen:
      return model.gen(t);
    case Term::Kind::kCompose:
      return model.compose(evaluate_with(t.lhs(), model),
                           evaluate_with(t.rhs(), model));
    case Term::Kind::kTensor:
      return model.tensor(evaluate_with(t.lhs(), model),
                          evaluate_with(t.rhs(), model));
  }
  throw TypeMismatch("unknown term kind");
}

/** Strict monoidal functor into matrices fixed by values on generators. */
struct EvalAssignment {
  std::map<std::string, std::size_t> objects;
  std::map<std::string, Matrix> morphisms;

  std::size_t dim(const ObjectWord& w) const;
};

/** Throws UnassignedGenerator, or ShapeMismatch for ill-shaped values. */
Matrix evaluate(const Term& t, const EvalAssignment& a);

nlohmann::json term_to_json(const Term& t);
/**
 * Parses the s-expression form. Generator boundaries may be omitted when a
 * signature entry supplies them.
 */
Term term_from_json(const nlohmann::json& j,
                    const std::map<std::string, std::pair<ObjectWord,
                                                          ObjectWord>>&
                        signature = {});

}  // namespace pivcat
