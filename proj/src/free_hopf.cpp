#include "hopfcat/free_hopf.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace hopfcat {

std::size_t FreeHopfInput::dim(const std::string& x,
                               const std::string& y) const {
  auto it = degrees.find({x, y});
  return it == degrees.end() ? 0 : it->second.size();
}

void FreeHopfInput::validate() const {
  for (const auto& x : objects)
    for (const auto& y : objects) {
      std::size_t d = dim(x, y);
      if (d == 0) continue;
      auto it = coalgebras.find({x, y});
      if (it == coalgebras.end() || it->second.dim != d)
        throw bad_input("input coalgebra missing or mismatched at (" + x +
                        ", " + y + ")");
      auto rep = check_coalgebra(it->second);
      if (!rep.empty())
        throw bad_input("invalid input coalgebra at (" + x + ", " + y +
                        "): " + rep.front());
      const auto& deg = degrees.at({x, y});
      for (std::size_t b = 0; b < d; ++b) {
        bool is_unit = x == y && unit_index.count(x) && unit_index.at(x) == b;
        if ((deg[b] == 0) != is_unit)
          throw bad_input(
              "degree-0 basis vectors must be exactly the units, at (" + x +
              ", " + y + ")");
      }
      const Coalgebra& c = it->second;
      for (std::size_t b = 0; b < d; ++b) {
        if (deg[b] == 0) {
          // Unit must be grouplike on the nose.
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t jj = 0; jj < d; ++jj) {
              bool diag = i == b && jj == b;
              const Scalar& v = c.delta.at(i * d + jj, b);
              if (diag ? !v.is_one() : !v.is_zero())
                throw bad_input("unit is not grouplike at " + x);
            }
          if (!c.epsilon.at(0, b).is_one())
            throw bad_input("unit has epsilon != 1 at " + x);
          continue;
        }
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t jj = 0; jj < d; ++jj)
            if (!c.delta.at(i * d + jj, b).is_zero() &&
                (deg[i] != deg[b] || deg[jj] != deg[b]))
              throw bad_input(
                  "comultiplication legs are not degree-homogeneous at (" + x +
                  ", " + y + ") basis " + std::to_string(b) +
                  "; this input is outside the supported graded class");
      }
    }
  for (const auto& x : objects)
    if (dim(x, x) > 0 && !unit_index.count(x))
      throw bad_input("missing unit index at " + x);
}

FreeHopfInput input_from_semihopf(const SemiHopfCategory& a) {
  a.validate_shapes();
  FreeHopfInput in;
  in.objects = a.cat.graph.objects;
  in.field = a.cat.graph.field;
  for (const auto& x : in.objects)
    for (const auto& y : in.objects) {
      std::size_t d = a.cat.graph.dim(x, y);
      if (d == 0) continue;
      in.coalgebras[{x, y}] = a.coalg(x, y);
      in.degrees[{x, y}] = std::vector<std::size_t>(d, 1);
    }
  for (const auto& x : in.objects) {
    std::size_t d = a.cat.graph.dim(x, x);
    if (d == 0) continue;
    const ExactMatrix& u = a.cat.unit(x);
    std::size_t idx = d;
    for (std::size_t i = 0; i < d; ++i)
      if (!u.at(i, 0).is_zero()) {
        if (idx != d || !u.at(i, 0).is_one())
          throw bad_input("unit of " + x + " is not a standard basis vector");
        idx = i;
      }
    if (idx == d) throw bad_input("zero unit at " + x);
    in.unit_index[x] = idx;
    in.degrees[{x, x}][idx] = 0;
  }
  VCategory cat = a.cat;
  in.mult = [cat](const std::string& x, const std::string& y,
                  const std::string& z, std::size_t i, std::size_t k)
      -> std::optional<std::vector<Scalar>> {
    std::size_t dyz = cat.graph.dim(y, z);
    return cat.comp(x, y, z).column_vec(i * dyz + k);
  };
  in.validate();
  return in;
}

FreeHopfInput input_from_free_category(const FinGraph& g, std::size_t max_len,
                                       const FieldSpec& f) {
  g.validate();
  auto paths = free_category_paths(g, max_len);
  // Flatten buckets: basis = paths ordered by length then lexicographically.
  auto flat = std::make_shared<std::map<ObjPair, std::vector<Path>>>();
  for (const auto& [pr, buckets] : paths)
    for (const auto& bucket : buckets)
      for (const auto& p : bucket) (*flat)[pr].push_back(p);
  FreeHopfInput in;
  in.objects = g.vertices;
  in.field = f;
  for (const auto& [pr, list] : *flat) {
    if (list.empty()) continue;
    std::vector<std::size_t> deg;
    for (const auto& p : list) deg.push_back(p.edges.size());
    in.degrees[pr] = deg;
    in.coalgebras[pr] = grouplike_coalgebra(list.size(), f);
  }
  for (const auto& x : g.vertices) in.unit_index[x] = 0;
  std::size_t cap = max_len;
  FieldSpec fld = f;
  in.mult = [flat, cap, fld](const std::string& x, const std::string& y,
                             const std::string& z, std::size_t i,
                             std::size_t k)
      -> std::optional<std::vector<Scalar>> {
    const auto& src1 = flat->at({x, y});
    const auto& src2 = flat->at({y, z});
    Path joined = src1.at(i);
    const Path& q = src2.at(k);
    joined.edges.insert(joined.edges.end(), q.edges.begin(), q.edges.end());
    if (joined.edges.size() > cap) return std::nullopt;
    const auto& tgt = flat->at({x, z});
    std::vector<Scalar> col(tgt.size(), Scalar::zero(fld));
    for (std::size_t t = 0; t < tgt.size(); ++t)
      if (tgt[t].edges == joined.edges) {
        col[t] = Scalar::one(fld);
        return col;
      }
    throw bad_input("internal: concatenated path not found");
  };
  in.validate();
  return in;
}

bool Echelon::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t p = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p == n_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < n_; ++j) v[j] = v[j] * inv;
  pivot_row_[p] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::vector<Scalar> Echelon::reduce(std::vector<Scalar> v) const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j].is_zero()) continue;
    auto it = pivot_row_.find(j);
    if (it == pivot_row_.end()) continue;
    const auto& row = rows_[it->second];
    Scalar c = v[j];
    for (std::size_t k = j; k < n_; ++k)
      if (!row[k].is_zero()) v[k] = v[k] - c * row[k];
  }
  return v;
}

bool Echelon::contains(std::vector<Scalar> v) const {
  v = reduce(std::move(v));
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t Echelon::dim_supported_from(std::size_t from) const {
  std::size_t count = 0;
  for (const auto& [p, r] : pivot_row_) {
    (void)r;
    if (p >= from) ++count;
  }
  return count;
}

namespace {

struct Builder {
  const FreeHopfInput& in;
  TruncatedFreeHopf& t;
  std::map<ObjPair, std::vector<std::uint32_t>> letters_at;

  std::size_t word_space(const ObjPair& pr) const {
    auto it = t.words.find(pr);
    return it == t.words.end() ? 0 : it->second.size();
  }

  std::size_t index_of(const ObjPair& pr, const FHWord& w) const {
    const auto& m = t.word_index.at(pr);
    auto it = m.find(w);
    if (it == m.end()) throw bad_input("internal: word not in table");
    return it->second;
  }

  std::size_t max_support_degree(const ObjPair& pr,
                                 const std::vector<Scalar>& v) const {
    std::size_t best = 0;
    const auto& ws = t.words.at(pr);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) best = std::max(best, t.word_degree(ws[i]));
    return best;
  }
};

}  // namespace

std::size_t TruncatedFreeHopf::word_degree(const FHWord& w) const {
  std::size_t d = 0;
  for (auto l : w) d += letters[l].degree;
  return d;
}

std::size_t TruncatedFreeHopf::bucket_dim(const std::string& x,
                                          const std::string& y,
                                          std::size_t l) const {
  const auto& fd = filtered_dims.at({x, y});
  return fd.at(l) - (l == 0 ? 0 : fd.at(l - 1));
}

ObjPair TruncatedFreeHopf::iota(std::size_t i, const std::string& x,
                                const std::string& y, std::size_t basis,
                                std::vector<Scalar>& out) const {
  ObjPair hom = i % 2 == 0 ? ObjPair{x, y} : ObjPair{y, x};
  out.assign(words.at(hom).size(), Scalar::zero(input.field));
  const auto& deg = input.degrees.at({x, y});
  if (deg.at(basis) == 0) {
    out[word_index.at(hom).at(FHWord{})] = Scalar::one(input.field);
    return hom;
  }
  if (deg.at(basis) > max_deg)
    throw bad_input("iota image exceeds the truncation degree");
  for (std::uint32_t l = 0; l < letters.size(); ++l) {
    const FHLetter& le = letters[l];
    if (le.src == hom.first && le.tgt == hom.second && le.summand == i &&
        le.basis == basis) {
      out[word_index.at(hom).at(FHWord{l})] = Scalar::one(input.field);
      return hom;
    }
  }
  throw bad_input("internal: letter not found");
}

std::optional<FHWord> TruncatedFreeHopf::shift_antipode(
    const ObjPair& hom, const FHWord& w) const {
  FHWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const FHLetter& le = letters[*it];
    if (le.summand + 1 > max_index) return std::nullopt;
    // The shifted letter: same underlying basis, next summand, swapped hom.
    bool found = false;
    for (std::uint32_t l = 0; l < letters.size(); ++l)
      if (letters[l].src == le.tgt && letters[l].tgt == le.src &&
          letters[l].summand == le.summand + 1 &&
          letters[l].basis == le.basis) {
        out.push_back(l);
        found = true;
        break;
      }
    if (!found) throw bad_input("internal: shifted letter not found");
  }
  (void)hom;
  return out;
}

namespace {

// delta legs of a single letter: list of ((c1, c2), coefficient) on the
// underlying input coalgebra, with the co-opposite twist on odd summands.
std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>>
letter_delta(const FreeHopfInput& in, const FHLetter& le) {
  ObjPair under = le.summand % 2 == 0 ? ObjPair{le.src, le.tgt}
                                      : ObjPair{le.tgt, le.src};
  const Coalgebra& c = in.coalgebras.at(under);
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> out;
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < c.dim; ++j) {
      const Scalar& v = le.summand % 2 == 0 ? c.delta.at(i * c.dim + j, le.basis)
                                            : c.delta.at(j * c.dim + i, le.basis);
      if (!v.is_zero()) out.push_back({{i, j}, v});
    }
  return out;
}

std::uint32_t letter_id(const TruncatedFreeHopf& t, const std::string& src,
                        const std::string& tgt, std::size_t summand,
                        std::size_t basis) {
  for (std::uint32_t l = 0; l < t.letters.size(); ++l)
    if (t.letters[l].src == src && t.letters[l].tgt == tgt &&
        t.letters[l].summand == summand && t.letters[l].basis == basis)
      return l;
  throw bad_input("internal: letter lookup failed");
}

}  // namespace

std::vector<std::pair<std::pair<FHWord, FHWord>, Scalar>>
TruncatedFreeHopf::word_delta(const ObjPair& hom, const FHWord& w) const {
  std::vector<std::pair<std::pair<FHWord, FHWord>, Scalar>> acc;
  acc.push_back({{FHWord{}, FHWord{}}, Scalar::one(input.field)});
  for (auto l : w) {
    const FHLetter& le = letters[l];
    auto legs = letter_delta(input, le);
    std::vector<std::pair<std::pair<FHWord, FHWord>, Scalar>> next;
    for (const auto& [ws, coef] : acc)
      for (const auto& [cc, v] : legs) {
        FHWord w1 = ws.first, w2 = ws.second;
        w1.push_back(letter_id(*this, le.src, le.tgt, le.summand, cc.first));
        w2.push_back(letter_id(*this, le.src, le.tgt, le.summand, cc.second));
        next.push_back({{std::move(w1), std::move(w2)}, coef * v});
      }
    acc = std::move(next);
  }
  (void)hom;
  return acc;
}

Scalar TruncatedFreeHopf::word_epsilon(const ObjPair& hom,
                                       const FHWord& w) const {
  Scalar e = Scalar::one(input.field);
  for (auto l : w) {
    const FHLetter& le = letters[l];
    ObjPair under = le.summand % 2 == 0 ? ObjPair{le.src, le.tgt}
                                        : ObjPair{le.tgt, le.src};
    e = e * input.coalgebras.at(under).epsilon.at(0, le.basis);
  }
  (void)hom;
  return e;
}

bool TruncatedFreeHopf::delta_lands_in_relation_coideal(
    const ObjPair& hom, const std::vector<Scalar>& v) const {
  const Echelon& r = relations.at(hom);
  std::size_t n = words.at(hom).size();
  const auto& index = word_index.at(hom);
  // Assemble delta(v) as a sparse n x n matrix on the word basis.
  std::map<std::size_t, std::vector<Scalar>> cols;  // second index -> column
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& [ws, coef] : word_delta(hom, words.at(hom)[i])) {
      std::size_t a = index.at(ws.first);
      std::size_t b = index.at(ws.second);
      auto [it, fresh] = cols.emplace(b, std::vector<Scalar>());
      if (fresh) it->second.assign(n, Scalar::zero(input.field));
      it->second[a] = it->second[a] + v[i] * coef;
    }
  }
  // Member of R(x)F + F(x)R iff reducing the first factor mod R and then the
  // second factor mod R kills everything.
  std::vector<std::vector<Scalar>> reduced_rows(n);
  bool any = false;
  for (auto& [b, col] : cols) {
    col = r.reduce(std::move(col));
    for (std::size_t a = 0; a < n; ++a)
      if (!col[a].is_zero()) {
        if (reduced_rows[a].empty())
          reduced_rows[a].assign(n, Scalar::zero(input.field));
        reduced_rows[a][b] = col[a];
        any = true;
      }
  }
  if (!any) return true;
  for (auto& row : reduced_rows) {
    if (row.empty()) continue;
    row = r.reduce(std::move(row));
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedFreeHopf free_hopf_truncated(const FreeHopfInput& in,
                                      std::size_t max_deg,
                                      std::size_t max_index) {
  if (max_deg < 1 || max_index < 1)
    throw bad_input("free Hopf truncation needs max_deg >= 1, max_index >= 1");
  in.validate();
  TruncatedFreeHopf t;
  t.input = in;
  t.max_deg = max_deg;
  t.max_index = max_index;

  Builder b{in, t, {}};

  // Letter table: positive-degree basis vectors of every summand, at every
  // word-hom; letters of degree beyond the truncation never occur in a word.
  for (const auto& x : in.objects)
    for (const auto& y : in.objects)
      for (std::size_t i = 0; i <= max_index; ++i) {
        ObjPair under = i % 2 == 0 ? ObjPair{x, y} : ObjPair{y, x};
        auto it = in.degrees.find(under);
        if (it == in.degrees.end()) continue;
        for (std::size_t c = 0; c < it->second.size(); ++c) {
          std::size_t d = it->second[c];
          if (d == 0 || d > max_deg) continue;
          b.letters_at[{x, y}].push_back(
              static_cast<std::uint32_t>(t.letters.size()));
          t.letters.push_back({x, y, i, c, d});
        }
      }

  // Word tables per hom: every composable letter sequence of total degree
  // <= max_deg, ordered by degree descending (so each filtration step is a
  // coordinate suffix), then by length and letter ids.
  for (const auto& x : in.objects)
    for (const auto& y : in.objects) {
      std::vector<FHWord> acc;
      FHWord cur;
      std::function<void(const std::string&, std::size_t)> dfs =
          [&](const std::string& at, std::size_t budget) {
            if (at == y) acc.push_back(cur);
            for (std::uint32_t l = 0;
                 l < static_cast<std::uint32_t>(t.letters.size()); ++l) {
              const FHLetter& le = t.letters[l];
              if (le.src != at || le.degree > budget) continue;
              cur.push_back(l);
              dfs(le.tgt, budget - le.degree);
              cur.pop_back();
            }
          };
      dfs(x, max_deg);
      std::stable_sort(acc.begin(), acc.end(),
                       [&](const FHWord& a, const FHWord& c) {
                         std::size_t da = t.word_degree(a),
                                     dc = t.word_degree(c);
                         if (da != dc) return da > dc;
                         if (a.size() != c.size()) return a.size() < c.size();
                         return a < c;
                       });
      ObjPair pr{x, y};
      t.words[pr] = std::move(acc);
      for (std::size_t i = 0; i < t.words[pr].size(); ++i)
        t.word_index[pr][t.words[pr][i]] = i;
      t.relations.emplace(pr, Echelon(t.words[pr].size(), in.field));
    }

  const FieldSpec& f = in.field;
  std::deque<std::pair<ObjPair, std::vector<Scalar>>> work;

  // Relation generators (a): functoriality defects of every iota^i; the
  // order of the right-hand product reverses on odd summands. Generators
  // with any component beyond the truncation degree are skipped whole
  // (componentwise truncation would impose spurious relations).
  for (std::size_t i = 0; i <= max_index; ++i)
    for (const auto& x : in.objects)
      for (const auto& y : in.objects)
        for (const auto& z : in.objects) {
          std::size_t dxy = in.dim(x, y), dyz = in.dim(y, z);
          if (dxy == 0 || dyz == 0) continue;
          const auto& degxy = in.degrees.at({x, y});
          const auto& degyz = in.degrees.at({y, z});
          for (std::size_t p = 0; p < dxy; ++p) {
            if (degxy[p] == 0) continue;
            for (std::size_t q = 0; q < dyz; ++q) {
              if (degyz[q] == 0) continue;
              if (degxy[p] + degyz[q] > max_deg) continue;
              auto prod = in.mult(x, y, z, p, q);
              if (!prod) continue;  // product outside the truncated carrier
              const auto& degxz = in.degrees.at({x, z});
              bool fits = true;
              for (std::size_t c = 0; c < prod->size(); ++c)
                if (!(*prod)[c].is_zero() && degxz[c] > max_deg) fits = false;
              if (!fits) continue;
              ObjPair hom =
                  i % 2 == 0 ? ObjPair{x, z} : ObjPair{z, x};
              std::vector<Scalar> rel(t.words.at(hom).size(),
                                      Scalar::zero(f));
              for (std::size_t c = 0; c < prod->size(); ++c) {
                if ((*prod)[c].is_zero()) continue;
                std::vector<Scalar> img;
                t.iota(i, x, z, c, img);
                for (std::size_t w = 0; w < img.size(); ++w)
                  rel[w] = rel[w] + (*prod)[c] * img[w];
              }
              // Odd summands are co-opposites: their letters sit at the
              // reversed hom and the product order flips.
              std::uint32_t lp = i % 2 == 0 ? letter_id(t, x, y, i, p)
                                            : letter_id(t, y, x, i, p);
              std::uint32_t lq = i % 2 == 0 ? letter_id(t, y, z, i, q)
                                            : letter_id(t, z, y, i, q);
              FHWord rhs = i % 2 == 0 ? FHWord{lp, lq} : FHWord{lq, lp};
              std::size_t wi = b.index_of(hom, rhs);
              rel[wi] = rel[wi] - Scalar::one(f);
              work.push_back({hom, std::move(rel)});
            }
          }
        }

  // Relation generators (b): antipode defects of every letter whose shift
  // stays within the summand bound and whose products fit the truncation.
  for (std::uint32_t l = 0; l < t.letters.size(); ++l) {
    const FHLetter& le = t.letters[l];
    if (le.summand + 1 > max_index) continue;
    if (2 * le.degree > max_deg) continue;
    auto legs = letter_delta(in, le);
    ObjPair under = le.summand % 2 == 0 ? ObjPair{le.src, le.tgt}
                                        : ObjPair{le.tgt, le.src};
    Scalar eps = in.coalgebras.at(under).epsilon.at(0, le.basis);
    // m o (id (x) S') o delta = j o epsilon at (src, src)
    {
      ObjPair hom{le.src, le.src};
      std::vector<Scalar> rel(t.words.at(hom).size(), Scalar::zero(f));
      for (const auto& [cc, v] : legs) {
        std::uint32_t l1 = letter_id(t, le.src, le.tgt, le.summand, cc.first);
        std::uint32_t l2 =
            letter_id(t, le.tgt, le.src, le.summand + 1, cc.second);
        std::size_t wi = b.index_of(hom, FHWord{l1, l2});
        rel[wi] = rel[wi] + v;
      }
      std::size_t ui = b.index_of(hom, FHWord{});
      rel[ui] = rel[ui] - eps;
      work.push_back({hom, std::move(rel)});
    }
    // m o (S' (x) id) o delta = j o epsilon at (tgt, tgt)
    {
      ObjPair hom{le.tgt, le.tgt};
      std::vector<Scalar> rel(t.words.at(hom).size(), Scalar::zero(f));
      for (const auto& [cc, v] : legs) {
        std::uint32_t l1 =
            letter_id(t, le.tgt, le.src, le.summand + 1, cc.first);
        std::uint32_t l2 = letter_id(t, le.src, le.tgt, le.summand, cc.second);
        std::size_t wi = b.index_of(hom, FHWord{l1, l2});
        rel[wi] = rel[wi] + v;
      }
      std::size_t ui = b.index_of(hom, FHWord{});
      rel[ui] = rel[ui] - eps;
      work.push_back({hom, std::move(rel)});
    }
  }

  // Two-sided closure by single letters. Word degrees only grow under
  // concatenation, so letterwise closure reaches the whole truncated ideal;
  // products with any component beyond the bound are skipped whole.
  while (!work.empty()) {
    auto [hom, vec] = std::move(work.front());
    work.pop_front();
    if (!t.relations.at(hom).insert(vec)) continue;
    std::size_t md = b.max_support_degree(hom, vec);
    const auto& ws = t.words.at(hom);
    // Right products: letters leaving hom.second.
    for (const auto& x : in.objects) {
      ObjPair ext{hom.second, x};
      auto it = b.letters_at.find(ext);
      if (it != b.letters_at.end())
        for (auto l : it->second) {
          if (md + t.letters[l].degree > max_deg) continue;
          ObjPair hom2{hom.first, x};
          std::vector<Scalar> nv(t.words.at(hom2).size(), Scalar::zero(f));
          for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i].is_zero()) continue;
            FHWord w = ws[i];
            w.push_back(l);
            nv[b.index_of(hom2, w)] = vec[i];
          }
          work.push_back({hom2, std::move(nv)});
        }
      // Left products: letters entering hom.first.
      ObjPair pre{x, hom.first};
      auto it2 = b.letters_at.find(pre);
      if (it2 != b.letters_at.end())
        for (auto l : it2->second) {
          if (md + t.letters[l].degree > max_deg) continue;
          ObjPair hom2{x, hom.second};
          std::vector<Scalar> nv(t.words.at(hom2).size(), Scalar::zero(f));
          for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i].is_zero()) continue;
            FHWord w{l};
            w.insert(w.end(), ws[i].begin(), ws[i].end());
            nv[b.index_of(hom2, w)] = vec[i];
          }
          work.push_back({hom2, std::move(nv)});
        }
    }
  }

  // Filtered quotient dimensions: with the degree-descending word order the
  // degree-<= l slice is a coordinate suffix, so its intersection with the
  // relation space is counted by echelon pivots in that suffix.
  for (const auto& x : in.objects)
    for (const auto& y : in.objects) {
      ObjPair pr{x, y};
      const auto& ws = t.words.at(pr);
      std::vector<std::size_t> fd(max_deg + 1, 0);
      for (std::size_t l = 0; l <= max_deg; ++l) {
        std::size_t nl = 0;
        for (const auto& w : ws)
          if (t.word_degree(w) <= l) ++nl;
        std::size_t cut =
            t.relations.at(pr).dim_supported_from(ws.size() - nl);
        fd[l] = nl - cut;
      }
      t.filtered_dims[pr] = std::move(fd);
    }
  return t;
}

bool verify_relation_coideal(const TruncatedFreeHopf& t) {
  for (const auto& [pr, ech] : t.relations)
    for (const auto& row : ech.rows())
      if (!t.delta_lands_in_relation_coideal(pr, row)) return false;
  return true;
}

namespace {

// Value of S^i o f on a basis vector of an input hom, inside h.
std::vector<Scalar> letter_value(const SemiHopfCategory& h, const Antipode& s,
                                 const SemiHopfMorphism& f, const ObjPair& under,
                                 std::size_t basis, std::size_t power) {
  std::vector<Scalar> v = f.components.at(under).column_vec(basis);
  std::string p = f.f0.at(under.first), q = f.f0.at(under.second);
  for (std::size_t k = 0; k < power; ++k) {
    v = s.at(p, q).apply(v);
    std::swap(p, q);
  }
  return v;
}

}  // namespace

UniversalMap universal_map_free(const TruncatedFreeHopf& t,
                                const SemiHopfCategory& h, const Antipode& s,
                                const SemiHopfMorphism& f) {
  UniversalMap out;
  const FieldSpec& fld = h.cat.graph.field;
  for (const auto& [pr, ws] : t.words) {
    std::string fx = f.f0.at(pr.first), fy = f.f0.at(pr.second);
    ExactMatrix m(h.cat.graph.dim(fx, fy), ws.size(), fld);
    for (std::size_t wi = 0; wi < ws.size(); ++wi) {
      const FHWord& w = ws[wi];
      std::vector<Scalar> cur;
      std::string at;
      if (w.empty()) {
        cur = h.cat.unit(fx).column_vec(0);
        at = fx;
      } else {
        const FHLetter& le0 = t.letters[w[0]];
        ObjPair under0 = le0.summand % 2 == 0 ? ObjPair{le0.src, le0.tgt}
                                              : ObjPair{le0.tgt, le0.src};
        cur = letter_value(h, s, f, under0, le0.basis, le0.summand);
        at = f.f0.at(le0.tgt);
        std::string from = f.f0.at(le0.src);
        for (std::size_t k = 1; k < w.size(); ++k) {
          const FHLetter& le = t.letters[w[k]];
          ObjPair under = le.summand % 2 == 0 ? ObjPair{le.src, le.tgt}
                                              : ObjPair{le.tgt, le.src};
          std::vector<Scalar> nxt =
              letter_value(h, s, f, under, le.basis, le.summand);
          std::string to = f.f0.at(le.tgt);
          // cur (x) nxt fed to composition at (from, at, to)
          std::vector<Scalar> prod(cur.size() * nxt.size(),
                                   Scalar::zero(fld));
          for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t c = 0; c < nxt.size(); ++c)
              prod[a * nxt.size() + c] = cur[a] * nxt[c];
          cur = h.cat.comp(from, at, to).apply(prod);
          at = to;
        }
      }
      for (std::size_t r = 0; r < cur.size(); ++r) m.set(r, wi, cur[r]);
    }
    out.on_words[pr] = std::move(m);
  }
  out.well_defined = true;
  for (const auto& [pr, ech] : t.relations) {
    const ExactMatrix& m = out.on_words.at(pr);
    for (const auto& row : ech.rows()) {
      std::vector<Scalar> img = m.apply(row);
      for (const auto& c : img)
        if (!c.is_zero()) out.well_defined = false;
    }
  }
  return out;
}

std::map<ObjPair, ExactMatrix> cofree_hopf_component(
    const SemiHopfCategory& h, const Antipode& s, const SemiHopfMorphism& f,
    const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw bad_input("component needs at least one index");
  std::map<ObjPair, ExactMatrix> out;
  for (const auto& x : h.cat.graph.objects)
    for (const auto& y : h.cat.graph.objects) {
      ObjPair pr{x, y};
      ExactMatrix legs(1, 1, h.cat.graph.field);
      legs.set(0, 0, Scalar::one(h.cat.graph.field));
      for (std::size_t k = 0; k < indices.size(); ++k) {
        ExactMatrix pw =
            ExactMatrix::identity(h.cat.graph.dim(x, y), h.cat.graph.field);
        std::string p = x, q = y;
        for (std::size_t step = 0; step < indices[k]; ++step) {
          pw = s.at(p, q) * pw;
          std::swap(p, q);
        }
        legs = kron(legs, f.components.at({p, q}) * pw);
      }
      out[pr] = legs * iterate_delta(h.coalg(x, y), indices.size());
    }
  return out;
}

std::vector<std::string> oracle_compare(const FinGraph& g, std::size_t max_deg,
                                        const FieldSpec& f) {
  FreeHopfInput in = input_from_free_category(g, max_deg, f);
  TruncatedFreeHopf t = free_hopf_truncated(in, max_deg, 1);
  auto words = free_groupoid_words(g, max_deg);
  std::vector<std::string> mismatches;
  for (const auto& x : g.vertices)
    for (const auto& y : g.vertices)
      for (std::size_t l = 0; l <= max_deg; ++l) {
        std::size_t got = t.bucket_dim(x, y, l);
        std::size_t want = words.at({x, y}).at(l).size();
        if (got != want)
          mismatches.push_back("(" + x + ", " + y + ", " + std::to_string(l) +
                               "): truncated dim " + std::to_string(got) +
                               " vs " + std::to_string(want) +
                               " reduced words");
      }
  return mismatches;
}

}  // namespace hopfcat
