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


#include "pivcat/suite.hpp"

#include <map>

#include "pivcat/augmentation.hpp"
#include "pivcat/errors.hpp"
#include "pivcat/gvec.hpp"
#include "pivcat/hopf_verify.hpp"
#include "pivcat/inner_hom.hpp"
#include "pivcat/intertwiner.hpp"
#include "pivcat/module_correspondence.hpp"
#include "pivcat/random.hpp"
#include "pivcat/scalar.hpp"
#include "pivcat/truncated_monad.hpp"
#include "parallel.hpp"

namespace pivcat {
namespace {

// Counts passes over many cases and keeps the first few failures.
class Tally {
 public:
  void record(bool ok, const std::string& label) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (examples_.size() < 5) examples_.push_back(label);
  }
  void emit(Report& r, const std::string& name) const {
    std::string detail = std::to_string(total_ - failed_) + "/" +
                         std::to_string(total_) + " passed";
    for (const std::string& e : examples_) detail += "; failed: " + e;
    r.add(name, failed_ == 0, detail);
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> examples_;
};

Matrix random_twist(Rng& rng, std::size_t n) {
  return random_invertible(rng, n, 3, true);
}

Report snakes(std::uint64_t seed) {
  Report r("snake identities");
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    Matrix q = random_twist(rng, n);
    t.record(check_pair(from_matrix(n, q)).passed(),
             "case " + std::to_string(i) + " n=" + std::to_string(n));
  }
  t.emit(r, "from_matrix passes all four snakes on 200 random twists");
  return r;
}

Report pivotal_morphisms(std::uint64_t seed) {
  Report r("pivotal morphisms");
  Rng rng(seed);
  Tally id;
  for (int i = 0; i < 50; ++i) {
    Scalar q1 = rng.scalar(4, true);
    Scalar q2 = rng.coin() ? q1 : rng.scalar(4, true);
    if (q1.is_zero()) q1 = Scalar(1);
    if (q2.is_zero()) q2 = Scalar(2);
    bool piv = is_pivotal_morphism(Matrix::identity(1),
                                   from_matrix(1, Matrix::scalar(q1)),
                                   from_matrix(1, Matrix::scalar(q2)));
    id.record(piv == (q1 == q2), q1.to_string() + " vs " + q2.to_string());
  }
  id.emit(r, "identity is pivotal iff the scalar twists agree");

  PivotalPair std3 = from_matrix(3, Matrix::identity(3));
  Tally tr;
  for (int i = 0; i < 100; ++i) {
    Matrix f = random_matrix(rng, 3, 3, 5, true);
    Matrix ft = f.transpose();
    tr.record(left_transpose(f, std3, std3) == ft &&
                  right_transpose(f, std3, std3) == ft,
              "map " + std::to_string(i));
  }
  tr.emit(r, "standard pairs transpose as matrices");

  for (std::size_t n : {2, 3}) {
    PivotalPair s = from_matrix(n, Matrix::identity(n));
    std::size_t m = n * (n - 1) / 2;
    r.add("antisymmetrizer is pivotal for n=" + std::to_string(n),
          is_pivotal_morphism(antisymmetrizer(n), tensor_pairs(s, s),
                              from_matrix(m, Matrix::identity(m))));
  }
  return r;
}

Report closure(std::uint64_t seed) {
  Report r("closed structure of C(P,Q)");
  Rng rng(seed);
  Tally tens, homs, units, duals;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    PivotalPair pp = from_matrix(n, random_twist(rng, n));
    Intertwiner a = random_object(rng, pp, rng.uniform(1, 2));
    Intertwiner b = random_object(rng, pp, rng.uniform(1, 2));
    std::string label = "case " + std::to_string(i);
    tens.record(check_object(tensor_objects(a, b)).passed(), label);
    homs.record(check_homs(a, b).passed(), label);
    units.record(check_closure_units(a, b).passed(), label);
    duals.record(check_duals(a).passed(), label);
  }
  tens.emit(r, "tensor of valid objects is valid");
  homs.emit(r, "inner homs are valid with inverse displays");
  units.emit(r, "closure units and counits");
  duals.emit(r, "duals are valid with duality maps in C(P,Q)");
  return r;
}

Report hopf(std::uint64_t) {
  Report r("Hopf axioms of H(𝔔)");
  struct Case {
    std::size_t n;
    Matrix q;
    std::size_t d;
    std::string label;
  };
  const std::vector<Case> cases = {
      {1, Matrix::identity(1), 4, "n=1 𝔔=(1)"},
      {1, Matrix::scalar(Scalar(2)), 4, "n=1 𝔔=(2)"},
      {1, Matrix::scalar(Scalar(1, 3)), 4, "n=1 𝔔=(1/3)"},
      {2, Matrix::identity(2), 3, "n=2 𝔔=I"},
      {2, Matrix::from_rows({{1, 1}, {0, 1}}), 3, "n=2 𝔔=[[1,1],[0,1]]"}};
  for (const Case& c : cases) {
    Report v = verify_hopf(build_presentation(c.n, c.q), c.d);
    r.add(c.label + " at d=" + std::to_string(c.d), v.passed());
  }
  return r;
}

Report monad_dims(std::uint64_t) {
  Report r("monad dimensions against H(𝔔)");
  auto run = [&](std::size_t n, const Matrix& q, std::size_t x, std::size_t d,
                 const std::string& label) {
    TruncatedT t = truncate(from_matrix(n, q), x, d);
    Report c = compare_with_hopf(t, build_presentation(n, q));
    r.add(label + " dimX=" + std::to_string(x) + " d=" + std::to_string(d),
          c.passed(),
          "dim T = " + std::to_string(t.dim()) + ", dim F_dH = " +
              c.info()["linear_algebra_dim"].dump());
  };
  for (std::size_t d = 0; d <= 4; ++d) {
    for (std::size_t x = 1; x <= 2; ++x) {
      run(1, Matrix::identity(1), x, d, "n=1 𝔔=(1)");
      run(1, Matrix::scalar(Scalar(3)), x, d, "n=1 𝔔=(3)");
    }
  }
  for (std::size_t d = 0; d <= 2; ++d) run(2, Matrix::identity(2), 1, d, "n=2 𝔔=I");
  return r;
}

Report modules(std::uint64_t seed) {
  Report r("module correspondence");
  Rng rng(seed);
  Tally rel, trip;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    Matrix q = random_twist(rng, n);
    Presentation pres = build_presentation(n, q);
    Intertwiner obj = random_object(rng, from_matrix(n, q), rng.uniform(1, 3));
    ModuleAction m = action_from_intertwiner(obj, pres);
    std::string label = "case " + std::to_string(i);
    rel.record(check_relations(m, pres).passed(), label);
    trip.record(intertwiner_from_action(m, pres).sigma == obj.sigma, label);
  }
  rel.emit(r, "every relation acts as zero");
  trip.emit(r, "action recovers sigma");
  return r;
}

Report counit(std::uint64_t seed) {
  Report r("counit and augmentation");
  Rng rng(seed);
  Tally kill, unit;
  for (int i = 0; i < 50; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    PivotalPair pp = from_matrix(n, random_twist(rng, n));
    Intertwiner obj = random_object(rng, pp, rng.uniform(1, 2));
    TruncatedT t = truncate(pp, obj.dimX, 2);
    LiftedMap theta = counit_action(t, obj);
    std::string label = "case " + std::to_string(i);
    kill.record(kills_relations(theta, t), label);
    unit.record((theta.map * unit_map(t)).is_identity(), label);
  }
  kill.emit(r, "θ kills the relation span");
  unit.emit(r, "θν = id");
  for (std::size_t n : {1, 2}) {
    TruncatedT t = truncate(from_matrix(n, Matrix::identity(n)), 1, 2);
    r.add("augmentation for n=" + std::to_string(n) + " 𝔔=I at d=2",
          augmentation_check(t).passed());
  }
  return r;
}

Report vec_g(std::uint64_t) {
  Report r("vec_G");
  const std::vector<std::pair<std::string, FiniteGroup>> groups = {
      {"Z/2", FiniteGroup::cyclic(2)},
      {"Z/6", FiniteGroup::cyclic(6)},
      {"S3", FiniteGroup::symmetric3()}};
  for (const auto& [label, G] : groups) {
    Tally pairs, enumerated;
    for (Element g = 0; g < G.order(); ++g) {
      pairs.record(check_graded_pair(G, graded_pair(G, g)).passed(), G.name(g));
      for (const EnumeratedSupport& e : enumerate_supports(G, g, 6)) {
        enumerated.record(e.valid && e.orbit_closed,
                          G.name(g) + " " + e.object.to_json(G).dump());
      }
    }
    pairs.emit(r, label + ": graded pairs pass the snakes");
    enumerated.emit(r, label + ": orbit supports carry valid sigma");
  }
  return r;
}

}  // namespace

std::vector<SuiteSection> suite_sections() {
  return {{"snakes", snakes},         {"pivotal", pivotal_morphisms},
          {"closure", closure},       {"hopf", hopf},
          {"monad", monad_dims},      {"modules", modules},
          {"counit", counit},         {"gvec", vec_g}};
}

std::uint64_t section_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finaliser over seed and index.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Report run_suite(std::uint64_t seed, bool parallel) {
  std::vector<SuiteSection> sections = suite_sections();
  std::vector<Report> out(sections.size());
  auto body = [&](std::size_t i) {
    try {
      out[i] = sections[i].run(section_seed(seed, i));
    } catch (const Error& e) {
      out[i] = Report(sections[i].name);
      out[i].add("section completed", false, e.what());
    }
  };
  if (parallel) {
    detail::parallel_for(sections.size(), body);
  } else {
    for (std::size_t i = 0; i < sections.size(); ++i) body(i);
  }
  Report r("suite");
  r.info()["seed"] = seed;
  r.info()["field"] = current_field().describe();
  for (std::size_t i = 0; i < sections.size(); ++i) {
    out[i].info()["section"] = sections[i].name;
    out[i].info()["seed"] = section_seed(seed, i);
    r.add_section(std::move(out[i]));
  }
  return r;
}

}  // namespace pivcat
