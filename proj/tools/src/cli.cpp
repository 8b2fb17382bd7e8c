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


#include "pivcat/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pivcat/augmentation.hpp"
#include "pivcat/diagram.hpp"
#include "pivcat/errors.hpp"
#include "pivcat/gvec.hpp"
#include "pivcat/hopf_verify.hpp"
#include "pivcat/inner_hom.hpp"
#include "pivcat/intertwiner.hpp"
#include "pivcat/json_io.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/presentation.hpp"
#include "pivcat/random.hpp"
#include "pivcat/rewriting.hpp"
#include "pivcat/suite.hpp"
#include "pivcat/term.hpp"
#include "pivcat/truncated_monad.hpp"

namespace pivcat {
namespace {

using nlohmann::json;

struct Settings {
  std::string field = "q";
  std::uint64_t seed = 7;
  std::size_t degree = 2;
  std::string json_path;
  std::string q = "identity";
  std::size_t n = 0;
};

// Reads a JSON document given inline or as a path.
json load_json(const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw InputError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(text);
}

// --Q accepts identity, diag:a,b,..., an inline matrix or a file.
Matrix parse_twist(const Settings& s, std::size_t& n) {
  Matrix q;
  if (s.q == "identity") {
    q = Matrix::identity(s.n == 0 ? 1 : s.n);
  } else if (s.q.rfind("diag:", 0) == 0) {
    std::vector<Scalar> d;
    std::stringstream ss(s.q.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) d.push_back(Scalar::parse(item));
    if (d.empty()) throw InputError("diag: needs at least one entry");
    q = Matrix(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) q(i, i) = d[i];
  } else {
    q = matrix_from_json(load_json(s.q));
  }
  if (!q.is_square()) throw InputError("--Q must be square");
  if (s.n != 0 && q.rows() != s.n) {
    throw InputError("--Q is " + q.shape_string() + " but --n is " +
                     std::to_string(s.n));
  }
  n = q.rows();
  return q;
}

class Output {
 public:
  Output(std::ostream& out, std::ostream& err, const Settings& s)
      : out_(out), err_(err), s_(s) {}

  void emit(const json& j) {
    std::string text = j.dump(2) + "\n";
    if (s_.json_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(s_.json_path);
    if (!f) throw InputError("cannot write " + s_.json_path);
    f << text;
  }

  // Emits payload with the report under "report" and picks the exit code.
  int finish(const Report& r, json payload = json::object()) {
    payload["report"] = r.to_json();
    emit(payload);
    if (r.passed()) return kExitPass;
    list_failures(r, "");
    return kExitCheckFailed;
  }

  std::ostream& err() { return err_; }

 private:
  void list_failures(const Report& r, const std::string& prefix) {
    std::string here = prefix + r.title();
    for (const Check& c : r.checks()) {
      if (!c.passed) err_ << "FAILED: " << here << ": " << c.name << "\n";
    }
    for (const Report& s : r.sections()) list_failures(s, here + " / ");
  }

  std::ostream& out_;
  std::ostream& err_;
  const Settings& s_;
};

void add_twist_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--n", s.n, "Dimension of P; inferred from --Q when 0");
  cmd->add_option("--Q", s.q, "identity | diag:a,b,... | matrix JSON | path");
}

PivotalPair pair_argument(const std::string& pair_path, const Settings& s) {
  if (!pair_path.empty()) return pair_from_json(load_json(pair_path));
  std::size_t n = 0;
  Matrix q = parse_twist(s, n);
  return from_matrix(n, q);
}

Intertwiner object_argument(const std::string& path, const PivotalPair& pp,
                            std::size_t dim, Rng& rng) {
  if (!path.empty()) return object_from_json(load_json(path));
  return random_object(rng, pp, dim);
}


}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Settings s;
  CLI::App app{"Exact verification of pivotal pairs, intertwined objects "
               "and their Hopf monads",
               "pivcat"};
  app.require_subcommand(1);
  app.add_option("--field", s.field, "q or fp:<prime>");
  app.add_option("--seed", s.seed, "Seed for randomized checks");
  app.add_option("--json", s.json_path, "Write the report to this path");
  Output o(out, err, s);
  std::function<int()> action;

  // pivotal
  auto* piv = app.add_subcommand("pivotal", "Pivotal pairs");
  piv->require_subcommand(1);
  std::string pair_path, f_text, pair2_path, q2 = "identity";
  {
    auto* c = piv->add_subcommand("check", "Snake identities of a pair");
    c->add_option("--pair", pair_path, "Pair JSON (inline or path)");
    add_twist_options(c, s);
    c->callback([&] {
      action = [&] {
        PivotalPair pp = pair_argument(pair_path, s);
        return o.finish(check_pair(pp), {{"pair", pair_to_json(pp)}});
      };
    });
  }
  {
    auto* c = piv->add_subcommand("from-matrix", "Pair built from a twist");
    add_twist_options(c, s);
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        PivotalPair pp = from_matrix(n, q);
        return o.finish(check_pair(pp), {{"pair", pair_to_json(pp)}});
      };
    });
  }
  {
    auto* c = piv->add_subcommand("transpose", "Left and right transposes");
    c->add_option("--f", f_text, "Matrix P1 -> P2 (inline or path)")
        ->required();
    c->add_option("--pair1", pair_path, "Source pair JSON");
    c->add_option("--pair2", pair2_path, "Target pair JSON");
    add_twist_options(c, s);
    c->add_option("--Q2", q2, "Twist of the target pair when --pair2 is absent");
    c->callback([&] {
      action = [&] {
        Matrix f = matrix_from_json(load_json(f_text));
        PivotalPair p1 = pair_argument(pair_path, s);
        PivotalPair p2;
        if (!pair2_path.empty()) {
          p2 = pair_from_json(load_json(pair2_path));
        } else {
          Settings s2 = s;
          s2.q = q2;
          s2.n = f.rows();
          std::size_t n2 = 0;
          Matrix qq = parse_twist(s2, n2);
          p2 = from_matrix(n2, qq);
        }
        Matrix l = left_transpose(f, p1, p2), r = right_transpose(f, p1, p2);
        o.emit({{"left_transpose", matrix_to_json(l)},
                {"right_transpose", matrix_to_json(r)},
                {"pivotal", l == r}});
        return int{kExitPass};
      };
    });
  }

  // cpq
  auto* cpq = app.add_subcommand("cpq", "Intertwined objects in C(P,Q)");
  cpq->require_subcommand(1);
  std::string a_path, b_path, diagram_path;
  std::size_t dim_a = 1, dim_b = 1;
  auto object_options = [&](CLI::App* c, bool two) {
    c->add_option(two ? "--a" : "--object", a_path,
                  "Object JSON; random when absent");
    if (two) c->add_option("--b", b_path, "Second object JSON");
    c->add_option("--dimA", dim_a, "Dimension of a random first object");
    if (two) c->add_option("--dimB", dim_b, "Dimension of a random second object");
    add_twist_options(c, s);
  };
  auto objects = [&](bool two) {
    Rng rng(s.seed);
    PivotalPair pp = pair_argument("", s);
    std::vector<Intertwiner> v{object_argument(a_path, pp, dim_a, rng)};
    if (two) v.push_back(object_argument(b_path, v[0].pair, dim_b, rng));
    return v;
  };
  {
    auto* c = cpq->add_subcommand("check", "Validate one object");
    object_options(c, false);
    c->callback([&] {
      action = [&] {
        Intertwiner a = objects(false)[0];
        return o.finish(check_object(a), {{"object", object_to_json(a)}});
      };
    });
  }
  {
    auto* c = cpq->add_subcommand("tensor", "Tensor product of two objects");
    object_options(c, true);
    c->callback([&] {
      action = [&] {
        auto v = objects(true);
        Intertwiner t = tensor_objects(v[0], v[1]);
        return o.finish(check_object(t), {{"object", object_to_json(t)}});
      };
    });
  }
  for (bool left : {true, false}) {
    auto* c = cpq->add_subcommand(left ? "hom-left" : "hom-right",
                                  left ? "Left inner hom [A,B]^l"
                                       : "Right inner hom [A,B]^r");
    object_options(c, true);
    c->callback([&, left] {
      action = [&, left] {
        auto v = objects(true);
        Intertwiner h = left ? left_hom(v[0], v[1]) : right_hom(v[0], v[1]);
        Report r("inner hom");
        r.add_section(check_homs(v[0], v[1]));
        r.add_section(check_closure_units(v[0], v[1]));
        return o.finish(r, {{"object", object_to_json(h)}});
      };
    });
  }
  {
    auto* c = cpq->add_subcommand("dual", "Left and right duals");
    object_options(c, false);
    c->callback([&] {
      action = [&] {
        Intertwiner a = objects(false)[0];
        DualObjects d = dual_objects(a);
        return o.finish(check_duals(a), {{"left", object_to_json(d.left)},
                                         {"right", object_to_json(d.right)}});
      };
    });
  }
  {
    auto* c = cpq->add_subcommand("diagram", "Object over a pivotal diagram");
    c->add_option("--diagram", diagram_path, "Diagram JSON")->required();
    c->add_option("--object", a_path, "Diagram object JSON")->required();
    c->callback([&] {
      action = [&] {
        PivotalDiagram d = diagram_from_json(load_json(diagram_path));
        DiagramIntertwiner x = diagram_object_from_json(load_json(a_path));
        return o.finish(diagram_check(d, x));
      };
    });
  }

  // hopf
  auto* hopf = app.add_subcommand("hopf", "The Hopf algebra H(𝔔)");
  hopf->require_subcommand(1);
  {
    auto* c = hopf->add_subcommand("build", "Generators and relations");
    add_twist_options(c, s);
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        o.emit(presentation_to_json(build_presentation(n, q)));
        return int{kExitPass};
      };
    });
  }
  {
    auto* c = hopf->add_subcommand("verify", "Check the Hopf axioms");
    add_twist_options(c, s);
    c->add_option("--degree", s.degree, "Word length bound");
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        return o.finish(verify_hopf(build_presentation(n, q), s.degree));
      };
    });
  }
  {
    auto* c = hopf->add_subcommand("export", "Presentation with rewrite rules");
    add_twist_options(c, s);
    c->add_option("--degree", s.degree, "Completion bound");
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        Presentation pres = build_presentation(n, q);
        RewriteSystem rs = complete(pres, std::max<std::size_t>(s.degree, 2));
        json words = json::array();
        for (const Word& w : normal_words(rs, s.degree)) {
          words.push_back(word_to_string(w, pres.names));
        }
        o.emit({{"presentation", presentation_to_json(pres)},
                {"rewriting", rs.to_json()},
                {"normal_words", words}});
        return int{kExitPass};
      };
    });
  }

  // monad
  auto* monad = app.add_subcommand("monad", "Truncations of the free monad");
  monad->require_subcommand(1);
  std::size_t dim_x = 1;
  {
    auto* c = monad->add_subcommand("truncate", "Quotient dimension at degree d");
    add_twist_options(c, s);
    c->add_option("--dimX", dim_x, "Dimension of X");
    c->add_option("--degree", s.degree, "Word length bound");
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        TruncatedT t = truncate(from_matrix(n, q), dim_x, s.degree);
        return o.finish(compare_with_hopf(t, build_presentation(n, q)),
                        {{"truncation", t.to_json()}});
      };
    });
  }
  {
    auto* c = monad->add_subcommand("augment", "Augmentation by the flip");
    add_twist_options(c, s);
    c->add_option("--dimX", dim_x, "Dimension of X");
    c->add_option("--degree", s.degree, "Word length bound");
    c->callback([&] {
      action = [&] {
        std::size_t n = 0;
        Matrix q = parse_twist(s, n);
        TruncatedT t = truncate(from_matrix(n, q), dim_x, s.degree);
        return o.finish(augmentation_check(t), {{"truncation", t.to_json()}});
      };
    });
  }

  // gvec
  auto* gvec = app.add_subcommand("gvec", "Graded example vec_G");
  gvec->require_subcommand(1);
  std::string group_text, g_name;
  std::size_t max_dim = 3;
  {
    auto* c = gvec->add_subcommand("enumerate", "Orbit-closed supports");
    c->add_option("--group", group_text, "Table JSON (inline or path), Z/<n> or S3")
        ->required();
    c->add_option("--g", g_name, "Element naming P = V_g")->required();
    c->add_option("--max-dim", max_dim, "Bound on total dimension");
    c->callback([&] {
      action = [&] {
        FiniteGroup G = group_text == "S3" ? FiniteGroup::symmetric3()
                        : group_text.rfind("Z/", 0) == 0
                            ? FiniteGroup::cyclic(std::stoul(group_text.substr(2)))
                            : group_from_json(load_json(group_text));
        Element g = G.index_of(g_name);
        Report r("vec_G enumeration");
        r.add_section(check_graded_pair(G, graded_pair(G, g)));
        json list = json::array();
        std::size_t bad = 0;
        for (const EnumeratedSupport& e : enumerate_supports(G, g, max_dim)) {
          list.push_back({{"support", e.object.to_json(G)},
                          {"dim", e.object.dim()},
                          {"sigma", matrix_to_json(e.sigma.dense())},
                          {"valid", e.valid},
                          {"orbit_closed", e.orbit_closed}});
          if (!e.valid || !e.orbit_closed) ++bad;
        }
        r.add("every support is orbit closed with a valid sigma", bad == 0);
        json orbits = json::array();
        for (const auto& orb : G.conjugation_orbits(g)) {
          json names = json::array();
          for (Element h : orb) names.push_back(G.name(h));
          orbits.push_back(names);
        }
        return o.finish(r, {{"group", group_to_json(G)},
                            {"g", g_name},
                            {"orbits", orbits},
                            {"supports", list}});
      };
    });
  }

  // suite
  auto* suite = app.add_subcommand("suite", "Full verification battery");
  suite->require_subcommand(1);
  {
    auto* c = suite->add_subcommand("run", "Run every section");
    c->add_option("--seed", s.seed, "Seed for randomized checks");
    c->callback([&] {
      action = [&] { return o.finish(run_suite(s.seed)); };
    });
  }

  // term
  auto* term = app.add_subcommand("term", "String-diagram terms");
  term->require_subcommand(1);
  std::string term_text;
  {
    auto* c = term->add_subcommand("eval", "Evaluate a term in matrices");
    c->add_option("--input", term_text,
                  "JSON {term, objects: {name: dim}, morphisms: {name: matrix}}")
        ->required();
    c->callback([&] {
      action = [&] {
        json j = load_json(term_text);
        EvalAssignment a;
        try {
          for (const auto& [k, v] : j.at("objects").items()) {
            a.objects[k] = v.get<std::size_t>();
          }
          for (const auto& [k, v] : j.at("morphisms").items()) {
            a.morphisms[k] = matrix_from_json(v);
          }
        } catch (const json::exception& e) {
          throw InputError(std::string("term input: ") + e.what());
        }
        Term t = term_from_json(j.at("term"));
        o.emit({{"term", t.to_string()}, {"value", matrix_to_json(evaluate(t, a))}});
        return int{kExitPass};
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }
  try {
    set_field(Field::parse(s.field));
    return action ? action() : int{kExitInputError};
  } catch (const NotCentral& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const HypothesisFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const RelationViolated& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace pivcat
