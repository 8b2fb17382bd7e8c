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

#include "pivcat/term.hpp"

#include <algorithm>

#include "pivcat/json_io.hpp"

namespace pivcat {

std::string word_string(const ObjectWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += w[i];
  }
  return s;
}

ObjectWord concat(const ObjectWord& a, const ObjectWord& b) {
  ObjectWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Term Term::id(ObjectWord w) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kId;
  n->source = w;
  n->target = std::move(w);
  return Term(std::move(n));
}

Term Term::gen(std::string name, ObjectWord source, ObjectWord target) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kGen;
  n->name = std::move(name);
  n->source = std::move(source);
  n->target = std::move(target);
  return Term(std::move(n));
}

Term compose(const Term& t1, const Term& t2) {
  if (t2.target() != t1.source()) {
    throw TypeMismatch("cannot compose: target " + word_string(t2.target()) +
                       " of right factor differs from source " +
                       word_string(t1.source()) + " of left factor");
  }
  if (t1.kind() == Term::Kind::kId) return t2;
  if (t2.kind() == Term::Kind::kId) return t1;
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::kCompose;
  n->source = t2.source();
  n->target = t1.target();
  n->children = {t1, t2};
  return Term(std::move(n));
}

Term tensor(const Term& t1, const Term& t2) {
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::kTensor;
  n->source = concat(t1.source(), t2.source());
  n->target = concat(t1.target(), t2.target());
  n->children = {t1, t2};
  return Term(std::move(n));
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::kId:
      return "id(" + word_string(source()) + ")";
    case Kind::kGen:
      return name();
    case Kind::kCompose:
      return "(" + lhs().to_string() + " . " + rhs().to_string() + ")";
    case Kind::kTensor:
      return "(" + lhs().to_string() + " x " + rhs().to_string() + ")";
  }
  return "?";
}

namespace {

void collect(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kId:
      return;
    case Term::Kind::kGen:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
      return;
    default:
      collect(t.lhs(), out);
      collect(t.rhs(), out);
  }
}

struct MatrixModel {
  const EvalAssignment& a;

  Matrix identity(const ObjectWord& w) const {
    return Matrix::identity(a.dim(w));
  }
  Matrix gen(const Term& t) const {
    auto it = a.morphisms.find(t.name());
    if (it == a.morphisms.end()) {
      throw UnassignedGenerator("no matrix assigned to generator '" +
                                t.name() + "'");
    }
    std::size_t r = a.dim(t.target()), c = a.dim(t.source());
    if (it->second.rows() != r || it->second.cols() != c) {
      throw ShapeMismatch("generator '" + t.name() + "' has shape " +
                          it->second.shape_string() + ", expected " +
                          std::to_string(r) + "x" + std::to_string(c));
    }
    return it->second;
  }
  Matrix compose(const Matrix& x, const Matrix& y) const { return x * y; }
  Matrix tensor(const Matrix& x, const Matrix& y) const { return kron(x, y); }
};

}  // namespace

std::vector<std::string> generators_of(const Term& t) {
  std::vector<std::string> out;
  collect(t, out);
  return out;
}

std::size_t EvalAssignment::dim(const ObjectWord& w) const {
  std::size_t d = 1;
  for (const auto& s : w) {
    auto it = objects.find(s);
    if (it == objects.end()) {
      throw UnassignedGenerator("no dimension assigned to object '" + s +
                                "'");
    }
    d *= it->second;
  }
  return d;
}

Matrix evaluate(const Term& t, const EvalAssignment& a) {
  return evaluate_with(t, MatrixModel{a});
}

nlohmann::json term_to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kId:
      return {{"op", "id"}, {"word", t.source()}};
    case Term::Kind::kGen:
      return {{"op", "gen"},
              {"name", t.name()},
              {"source", t.source()},
              {"target", t.target()}};
    case Term::Kind::kCompose:
      return {{"op", "compose"},
              {"args", {term_to_json(t.lhs()), term_to_json(t.rhs())}}};
    case Term::Kind::kTensor:
      return {{"op", "tensor"},
              {"args", {term_to_json(t.lhs()), term_to_json(t.rhs())}}};
  }
  return nullptr;
}

Term term_from_json(
    const nlohmann::json& j,
    const std::map<std::string, std::pair<ObjectWord, ObjectWord>>&
        signature) {
  if (!j.is_object() || !j.contains("op")) {
    throw InputError("term node needs an \"op\" field");
  }
  std::string op = j.at("op").get<std::string>();
  if (op == "id") {
    return Term::id(j.value("word", ObjectWord{}));
  }
  if (op == "gen") {
    std::string name = j.at("name").get<std::string>();
    auto sig = signature.find(name);
    ObjectWord s, t;
    if (j.contains("source") && j.contains("target")) {
      s = j.at("source").get<ObjectWord>();
      t = j.at("target").get<ObjectWord>();
    } else if (sig != signature.end()) {
      s = sig->second.first;
      t = sig->second.second;
    } else {
      throw InputError("generator '" + name + "' has no boundary words");
    }
    return Term::gen(name, s, t);
  }
  if (op == "compose" || op == "tensor") {
    const auto& args = j.at("args");
    if (!args.is_array() || args.empty()) {
      throw InputError(op + " needs a non-empty args array");
    }
    Term acc = term_from_json(args.at(0), signature);
    for (std::size_t i = 1; i < args.size(); ++i) {
      Term next = term_from_json(args.at(i), signature);
      acc = op == "compose" ? compose(acc, next) : tensor(acc, next);
    }
    return acc;
  }
  throw InputError("unknown term op '" + op + "'");
}

}  // namespace pivcat
