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


#include "pivcat/truncated_monad.hpp"

#include <algorithm>
#include <map>

#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"
#include "pivcat/rewriting.hpp"
#include "parallel.hpp"

namespace pivcat {

std::string sign_word_string(const SignWord& w) {
  if (w.empty()) return "0";
  std::string s;
  for (Sign c : w) s += static_cast<char>(c);
  return s;
}

SignWord parse_sign_word(const std::string& s) {
  SignWord w;
  if (s == "0") return w;
  for (char c : s) {
    if (c == '+') {
      w.push_back(Sign::kPlus);
    } else if (c == '-') {
      w.push_back(Sign::kMinus);
    } else {
      throw InputError("sign word '" + s + "' has a letter other than + or -");
    }
  }
  return w;
}

std::vector<SignWord> sign_words(std::size_t max_len) {
  std::vector<SignWord> out{SignWord{}};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i) {
      for (Sign s : {Sign::kPlus, Sign::kMinus}) {
        SignWord w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    start = end;
  }
  return out;
}

SignWord concat(const SignWord& a, const SignWord& b) {
  SignWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t left_dim(const PivotalPair& pair, const SignWord& w) {
  std::size_t d = 1;
  for (Sign s : w) d *= s == Sign::kPlus ? pair.dimQ : pair.dimP;
  return d;
}

std::size_t right_dim(const PivotalPair& pair, const SignWord& w) {
  std::size_t d = 1;
  for (Sign s : w) d *= s == Sign::kPlus ? pair.dimP : pair.dimQ;
  return d;
}

Matrix functor_map(const PivotalPair& pair, const SignWord& w,
                   const Matrix& g) {
  return kron_all({Matrix::identity(left_dim(pair, w)), g,
                   Matrix::identity(right_dim(pair, w))});
}

std::size_t TruncatedT::block_of(const SignWord& w) const {
  if (w.size() > bound) {
    throw DegreeExceeded("word " + sign_word_string(w) + " is longer than " +
                         std::to_string(bound));
  }
  // Words of length k start at 2^k - 1; + is bit 0, - is bit 1.
  std::size_t idx = 0;
  for (Sign s : w) idx = 2 * idx + (s == Sign::kPlus ? 0 : 1);
  return ((std::size_t{1} << w.size()) - 1) + idx;
}

Matrix TruncatedT::inclusion(const SignWord& w) const {
  std::size_t b = block_of(w);
  Matrix m(total_dim, dims[b]);
  for (std::size_t i = 0; i < dims[b]; ++i) m(offsets[b] + i, i) = Scalar(1);
  return m;
}

Matrix TruncatedT::psi(const SignWord& w) const {
  std::size_t b = block_of(w);
  return projection.block(0, offsets[b], dim(), dims[b]);
}

nlohmann::json TruncatedT::to_json() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t b = 0; b < words.size(); ++b) {
    blocks.push_back({{"word", sign_word_string(words[b])}, {"dim", dims[b]}});
  }
  return {{"dimP", pair.dimP},
          {"dimQ", pair.dimQ},
          {"dimX", dimX},
          {"degree", bound},
          {"blocks", blocks},
          {"total_dim", total_dim},
          {"relation_instances", relation_instances},
          {"relation_vectors", relation_vectors},
          {"relation_rank", relation_rank()},
          {"quotient_dim", dim()}};
}

namespace {

struct Instance {
  int family;
  SignWord outer;
  SignWord inner;
};

// Columns are the differences top - bottom of one whiskered parallel pair.
Matrix instance_vectors(const TruncatedT& t, const Instance& in) {
  const PivotalPair& pp = t.pair;
  std::size_t y = functor_dim(pp, in.inner, t.dimX);
  std::size_t p = pp.dimP, q = pp.dimQ;
  Matrix top, bottom;
  SignWord mid;
  switch (in.family) {
    case 0:  // P⊗Q⊗Y
      top = kron(Matrix::identity(p * q * y), pp.cvl);
      bottom = kron(pp.evr, Matrix::identity(y));
      mid = {Sign::kMinus, Sign::kPlus};
      break;
    case 1:  // Y⊗Q⊗P
      top = kron(pp.cvr, Matrix::identity(y * q * p));
      bottom = kron(Matrix::identity(y), pp.evl);
      mid = {Sign::kPlus, Sign::kMinus};
      break;
    case 2:  // Q⊗P⊗Y
      top = kron(Matrix::identity(q * p * y), pp.cvr);
      bottom = kron(pp.evl, Matrix::identity(y));
      mid = {Sign::kPlus, Sign::kMinus};
      break;
    default:  // Y⊗P⊗Q
      top = kron(pp.cvl, Matrix::identity(y * p * q));
      bottom = kron(Matrix::identity(y), pp.evr);
      mid = {Sign::kMinus, Sign::kPlus};
      break;
  }
  SignWord long_word = concat(concat(in.outer, mid), in.inner);
  SignWord short_word = concat(in.outer, in.inner);
  Matrix tw = functor_map(pp, in.outer, top);
  Matrix bw = functor_map(pp, in.outer, bottom);
  std::size_t lb = t.block_of(long_word), sb = t.block_of(short_word);
  Matrix v(t.total_dim, tw.cols());
  v.set_block(t.offsets[lb], 0, tw);
  Matrix cur = v.block(t.offsets[sb], 0, bw.rows(), bw.cols());
  v.set_block(t.offsets[sb], 0, cur - bw);
  return v;
}

}  // namespace

TruncatedT truncate(const PivotalPair& pair, std::size_t dimX, std::size_t d) {
  TruncatedT t;
  t.pair = pair;
  t.dimX = dimX;
  t.bound = d;
  t.words = sign_words(d);
  for (const SignWord& w : t.words) {
    t.offsets.push_back(t.total_dim);
    t.dims.push_back(functor_dim(pair, w, dimX));
    t.total_dim += t.dims.back();
  }

  std::vector<Instance> instances;
  if (d >= 2) {
    for (const SignWord& u : sign_words(d - 2)) {
      for (const SignWord& w : sign_words(d - 2 - u.size())) {
        for (int f = 0; f < 4; ++f) instances.push_back({f, u, w});
      }
    }
  }
  t.relation_instances = instances.size();

  // Assemble in parallel, concatenate in instance order.
  std::vector<Matrix> pieces(instances.size());
  detail::parallel_for(instances.size(), [&](std::size_t i) {
    pieces[i] = instance_vectors(t, instances[i]);
  });

  std::size_t nvec = 0;
  for (const Matrix& m : pieces) nvec += m.cols();
  t.relation_vectors = nvec;

  // Rows are relation vectors with coordinates reversed, so elimination
  // pivots on the latest coordinates and the kept ones come first.
  std::size_t n = t.total_dim;
  Matrix rows(nvec, n);
  std::size_t r = 0;
  for (const Matrix& m : pieces) {
    for (std::size_t c = 0; c < m.cols(); ++c, ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, c).is_zero()) rows(r, n - 1 - i) = m(i, c);
      }
    }
  }
  RowEchelon e = rref(rows);
  std::vector<bool> pivot(n, false);
  for (std::size_t c : e.pivots) pivot[n - 1 - c] = true;
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivot[i]) {
      pos[i] = t.kept.size();
      t.kept.push_back(i);
    }
  }
  std::size_t k = t.kept.size();
  t.projection = Matrix(k, n);
  t.section = Matrix(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    t.projection(j, t.kept[j]) = Scalar(1);
    t.section(t.kept[j], j) = Scalar(1);
  }
  t.relation_basis = Matrix(n, e.pivots.size());
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    std::size_t c = n - 1 - e.pivots[row];
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& x = e.reduced(row, n - 1 - i);
      if (x.is_zero()) continue;
      t.relation_basis(i, row) = x;
      if (i != c) t.projection(pos[i], c) = -x;
    }
  }
  return t;
}

bool kills_relations(const LiftedMap& m, const TruncatedT& t) {
  if (m.on_words.cols() != t.total_dim) {
    throw ShapeMismatch("map on words has " + m.on_words.shape_string() +
                        " but the direct sum has dimension " +
                        std::to_string(t.total_dim));
  }
  return (m.on_words * t.relation_basis).is_zero();
}

namespace {

LiftedMap lift(Matrix on_words, const TruncatedT& t) {
  Matrix map = on_words * t.section;
  return {std::move(on_words), std::move(map)};
}

// Builds the maps F_w(X) → X obtained by applying act_+ and act_- from
// the innermost letter outwards, laid side by side over all blocks.
Matrix iterate_actions(const TruncatedT& t, const Matrix& act_plus,
                       const Matrix& act_minus) {
  const PivotalPair& pp = t.pair;
  std::vector<Matrix> per(t.words.size());
  Matrix out(t.dimX, t.total_dim);
  for (std::size_t b = 0; b < t.words.size(); ++b) {
    const SignWord& w = t.words[b];
    if (w.empty()) {
      per[b] = Matrix::identity(t.dimX);
    } else {
      SignWord rest(w.begin() + 1, w.end());
      const Matrix& inner = per[t.block_of(rest)];
      bool plus = w.front() == Sign::kPlus;
      std::size_t a = plus ? pp.dimQ : pp.dimP;
      std::size_t c = plus ? pp.dimP : pp.dimQ;
      per[b] = (plus ? act_plus : act_minus) *
               kron_all({Matrix::identity(a), inner, Matrix::identity(c)});
    }
    out.set_block(0, t.offsets[b], per[b]);
  }
  return out;
}

}  // namespace

Matrix unit_map(const TruncatedT& t) { return t.psi({}); }

LiftedMap functor_on(const TruncatedT& src, const TruncatedT& dst,
                     const Matrix& g) {
  if (src.bound != dst.bound || src.pair != dst.pair) {
    throw ShapeMismatch("functor_on needs truncations over one pair and bound");
  }
  if (g.rows() != dst.dimX || g.cols() != src.dimX) {
    throw ShapeMismatch("map of shape " + g.shape_string() + " between " +
                        std::to_string(src.dimX) + " and " +
                        std::to_string(dst.dimX));
  }
  Matrix on(dst.dim(), src.total_dim);
  for (std::size_t b = 0; b < src.words.size(); ++b) {
    const SignWord& w = src.words[b];
    on.set_block(0, src.offsets[b],
                 dst.psi(w) * functor_map(src.pair, w, g));
  }
  return lift(std::move(on), src);
}

LiftedMap multiplication(const TruncatedT& outer, const TruncatedT& inner,
                         const TruncatedT& target) {
  if (outer.pair != inner.pair || inner.pair != target.pair) {
    throw PairMismatch("multiplication needs truncations over one pair");
  }
  if (outer.dimX != inner.dim() || target.dimX != inner.dimX) {
    throw ShapeMismatch("multiplication: outer truncation must sit over the "
                        "inner quotient and the target over X");
  }
  if (outer.bound + inner.bound > target.bound) {
    throw DegreeExceeded("slot degrees " + std::to_string(outer.bound) + "+" +
                         std::to_string(inner.bound) + " exceed the bound " +
                         std::to_string(target.bound));
  }
  Matrix on(target.dim(), outer.total_dim);
  for (std::size_t ob = 0; ob < outer.words.size(); ++ob) {
    const SignWord& v = outer.words[ob];
    Matrix acc(target.dim(), outer.dims[ob]);
    for (std::size_t ib = 0; ib < inner.words.size(); ++ib) {
      const SignWord& w = inner.words[ib];
      // The w-part of the inner section, F_v applied, lands in F_{vw}(X).
      Matrix piece = inner.section.block(inner.offsets[ib], 0, inner.dims[ib],
                                         inner.dim());
      acc += target.psi(concat(v, w)) * functor_map(outer.pair, v, piece);
    }
    on.set_block(0, outer.offsets[ob], acc);
  }
  return lift(std::move(on), outer);
}

Matrix word_coevaluation(const PivotalPair& pair, const SignWord& w) {
  if (w.empty()) return Matrix::identity(1);
  SignWord rest(w.begin() + 1, w.end());
  const Matrix& c = w.front() == Sign::kPlus ? pair.cvl : pair.cvr;
  return kron_all({Matrix::identity(right_dim(pair, rest)), c,
                   Matrix::identity(left_dim(pair, rest))}) *
         word_coevaluation(pair, rest);
}

LiftedMap comultiplication(const TruncatedT& txy, const TruncatedT& tx,
                           const TruncatedT& ty) {
  if (txy.pair != tx.pair || tx.pair != ty.pair) {
    throw PairMismatch("comultiplication needs truncations over one pair");
  }
  if (txy.bound != tx.bound || tx.bound != ty.bound) {
    throw DegreeExceeded("comultiplication needs equal bounds");
  }
  if (txy.dimX != tx.dimX * ty.dimX) {
    throw ShapeMismatch("comultiplication: dim X⊗Y must be dim X · dim Y");
  }
  const PivotalPair& pp = txy.pair;
  Matrix on(tx.dim() * ty.dim(), txy.total_dim);
  for (std::size_t b = 0; b < txy.words.size(); ++b) {
    const SignWord& w = txy.words[b];
    Matrix insert = kron_all(
        {Matrix::identity(left_dim(pp, w) * tx.dimX), word_coevaluation(pp, w),
         Matrix::identity(ty.dimX * right_dim(pp, w))});
    on.set_block(0, txy.offsets[b], kron(tx.psi(w), ty.psi(w)) * insert);
  }
  return lift(std::move(on), txy);
}

LiftedMap counit_map(const TruncatedT& t1) {
  if (t1.dimX != 1) {
    throw ShapeMismatch("T₀ is defined on T(𝟙) only");
  }
  return lift(iterate_actions(t1, t1.pair.evl, t1.pair.evr), t1);
}

LiftedMap counit_action(const TruncatedT& t, const Intertwiner& obj) {
  if (obj.pair != t.pair) {
    throw InvalidObject("object lives over a different pivotal pair");
  }
  if (obj.dimX != t.dimX) {
    throw InvalidObject("object has dimension " + std::to_string(obj.dimX) +
                        ", truncation expects " + std::to_string(t.dimX));
  }
  require_sigma_shape(obj.dimX, obj.sigma, obj.pair);
  if (!check_object(obj).passed()) {
    throw InvalidObject("sigma is not a valid intertwining");
  }
  const PivotalPair& pp = obj.pair;
  Matrix ix = Matrix::identity(obj.dimX);
  Matrix alpha = kron(pp.evl, ix) * kron(Matrix::identity(pp.dimQ), obj.sigma);
  Matrix beta = kron(ix, pp.evr) *
                kron(invert(obj.sigma), Matrix::identity(pp.dimQ));
  return lift(iterate_actions(t, alpha, beta), t);
}

MonadMaps structure_maps(const TruncatedT& t) {
  MonadMaps m;
  m.nu = unit_map(t);

  TruncatedT t1 = truncate(t.pair, 1, t.bound);
  LiftedMap t0 = counit_map(t1);
  m.counit = t0.map;
  m.well_defined.add("T₀ kills the relations", kills_relations(t0, t1));

  TruncatedT txx = truncate(t.pair, t.dimX * t.dimX, t.bound);
  LiftedMap t2 = comultiplication(txx, t, t);
  m.comult = t2.map;
  m.well_defined.add("T₂ kills the relations", kills_relations(t2, txx));

  for (std::size_t a = 1; a < t.bound; ++a) {
    for (std::size_t b = 1; a + b <= t.bound; ++b) {
      TruncatedT inner = truncate(t.pair, t.dimX, b);
      TruncatedT outer = truncate(t.pair, inner.dim(), a);
      LiftedMap mu = multiplication(outer, inner, t);
      m.well_defined.add("μ kills the relations at slot " + std::to_string(a) +
                             "+" + std::to_string(b),
                         kills_relations(mu, outer));
      m.mu.push_back({a, b, std::move(mu.map)});
    }
  }
  return m;
}

std::size_t normal_form_count(const Presentation& pres, std::size_t d) {
  RewriteSystem rs = complete(pres, std::max<std::size_t>(d, 2));
  return normal_words(rs, d).size();
}

std::size_t filtration_dim_oracle(const Presentation& pres, std::size_t d) {
  std::size_t a = pres.alphabet_size();
  std::vector<Word> words{Word{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == d) continue;
    for (std::size_t c = 0; c < a; ++c) {
      words.push_back(words[i] + static_cast<char>(c));
    }
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (const NCPoly& rel : pres.relations) {
    std::size_t deg = rel.degree();
    if (deg > d) continue;
    for (const Word& u : words) {
      if (u.size() + deg > d) continue;
      for (const Word& v : words) {
        if (u.size() + v.size() + deg > d) continue;
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (const auto& [w, c] : rel.terms()) {
          row.emplace_back(index.at(u + w + v), c);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix m(rows.size(), words.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, x] : rows[r]) m(r, c) += x;
  }
  return words.size() - rank(m);
}

Report compare_with_hopf(const TruncatedT& t, const Presentation& pres) {
  Report r("monad against H(𝔔)");
  bool same_pair = t.pair == from_matrix(pres.n, pres.q);
  r.add("pair built from the presentation's twist", same_pair);
  std::size_t nf = normal_form_count(pres, t.bound);
  std::size_t oracle = filtration_dim_oracle(pres, t.bound);
  r.info()["degree"] = t.bound;
  r.info()["dimX"] = t.dimX;
  r.info()["quotient_dim"] = t.dim();
  r.info()["normal_form_count"] = nf;
  r.info()["linear_algebra_dim"] = oracle;
  r.add("normal forms agree with linear algebra", nf == oracle,
        std::to_string(nf) + " vs " + std::to_string(oracle));
  r.add("dim T = dim X · dim F_dH", t.dim() == t.dimX * oracle,
        std::to_string(t.dim()) + " vs " + std::to_string(t.dimX) + "·" +
            std::to_string(oracle));
  return r;
}

}  // namespace pivcat
