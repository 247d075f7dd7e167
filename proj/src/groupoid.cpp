#include "hopfcat/groupoid.hpp"

#include <algorithm>
#include <set>

namespace hopfcat {

void FinGraph::validate() const {
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw bad_input("duplicate vertex id");
  std::set<std::string> es;
  for (const auto& e : edges) {
    if (!es.insert(e.id).second) throw bad_input("duplicate edge id: " + e.id);
    if (!vs.count(e.src) || !vs.count(e.tgt))
      throw bad_input("edge " + e.id + " has unknown endpoint");
  }
}

std::size_t FinGraph::vertex_index(const std::string& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return i;
  throw bad_input("unknown vertex: " + v);
}

std::map<ObjPair, std::vector<std::vector<Path>>> free_category_paths(
    const FinGraph& g, std::size_t max_len) {
  g.validate();
  std::map<ObjPair, std::vector<std::vector<Path>>> out;
  for (const auto& x : g.vertices)
    for (const auto& y : g.vertices)
      out[{x, y}].resize(max_len + 1);
  for (const auto& x : g.vertices) out[{x, x}][0].push_back(Path{});
  // Extend paths on the right, one edge at a time; lexicographic order is
  // preserved because buckets are extended in order and edges scanned in order.
  for (std::size_t l = 1; l <= max_len; ++l)
    for (const auto& x : g.vertices)
      for (const auto& y : g.vertices) {
        auto& bucket = out[{x, y}][l];
        for (const auto& mid : g.vertices)
          for (const auto& p : out[{x, mid}][l - 1])
            for (std::size_t e = 0; e < g.edges.size(); ++e)
              if (g.edges[e].src == mid && g.edges[e].tgt == y) {
                Path q = p;
                q.edges.push_back(e);
                bucket.push_back(q);
              }
        std::sort(bucket.begin(), bucket.end(),
                  [](const Path& a, const Path& b) { return a.edges < b.edges; });
      }
  return out;
}

bool ReducedWord::operator==(const ReducedWord& o) const {
  return src == o.src && tgt == o.tgt && letters == o.letters;
}

bool ReducedWord::operator<(const ReducedWord& o) const {
  if (letters.size() != o.letters.size())
    return letters.size() < o.letters.size();
  return std::lexicographical_compare(letters.begin(), letters.end(),
                                      o.letters.begin(), o.letters.end());
}

std::string ReducedWord::str(const FinGraph& g) const {
  if (letters.empty()) return "id_" + src;
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ".";
    s += g.edges[l.edge].id;
    if (l.inv) s += "^-1";
  }
  return s;
}

namespace {

std::string letter_src(const FinGraph& g, const SignedLetter& l) {
  return l.inv ? g.edges[l.edge].tgt : g.edges[l.edge].src;
}
std::string letter_tgt(const FinGraph& g, const SignedLetter& l) {
  return l.inv ? g.edges[l.edge].src : g.edges[l.edge].tgt;
}

}  // namespace

ReducedWord reduce_word(const FinGraph& g,
                        const std::vector<SignedLetter>& letters,
                        const std::string& src) {
  std::string at = src;
  std::vector<SignedLetter> stack;
  for (const auto& l : letters) {
    if (letter_src(g, l) != at)
      throw bad_input("word letters do not chain at " + at);
    if (!stack.empty() && stack.back().edge == l.edge &&
        stack.back().inv != l.inv) {
      at = letter_src(g, stack.back());
      stack.pop_back();
    } else {
      stack.push_back(l);
      at = letter_tgt(g, l);
    }
  }
  ReducedWord w;
  w.letters = std::move(stack);
  w.src = src;
  w.tgt = at;
  return w;
}

ReducedWord inverse_word(const ReducedWord& w) {
  ReducedWord v;
  v.src = w.tgt;
  v.tgt = w.src;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v.letters.push_back({it->edge, !it->inv});
  return v;
}

ReducedWord concat_words(const FinGraph& g, const ReducedWord& a,
                         const ReducedWord& b) {
  if (a.tgt != b.src) throw bad_input("words do not compose");
  std::vector<SignedLetter> all = a.letters;
  all.insert(all.end(), b.letters.begin(), b.letters.end());
  return reduce_word(g, all, a.src);
}

std::map<ObjPair, std::vector<std::vector<ReducedWord>>> free_groupoid_words(
    const FinGraph& g, std::size_t max_len) {
  g.validate();
  std::map<ObjPair, std::vector<std::vector<ReducedWord>>> out;
  for (const auto& x : g.vertices)
    for (const auto& y : g.vertices)
      out[{x, y}].resize(max_len + 1);
  for (const auto& x : g.vertices) {
    ReducedWord e;
    e.src = e.tgt = x;
    out[{x, x}][0].push_back(e);
  }
  for (std::size_t l = 1; l <= max_len; ++l)
    for (const auto& x : g.vertices)
      for (const auto& y : g.vertices) {
        auto& bucket = out[{x, y}][l];
        for (const auto& mid : g.vertices)
          for (const auto& w : out[{x, mid}][l - 1])
            for (std::size_t e = 0; e < g.edges.size(); ++e)
              for (bool inv : {false, true}) {
                SignedLetter letter{e, inv};
                if (letter_src(g, letter) != mid || letter_tgt(g, letter) != y)
                  continue;
                if (!w.letters.empty() && w.letters.back().edge == e &&
                    w.letters.back().inv != inv)
                  continue;  // would cancel
                ReducedWord v = w;
                v.letters.push_back(letter);
                v.tgt = y;
                bucket.push_back(v);
              }
        std::sort(bucket.begin(), bucket.end());
      }
  return out;
}

void FinCategory::validate() const {
  std::set<std::string> os(objects.begin(), objects.end());
  if (os.size() != objects.size()) throw bad_input("duplicate object id");
  std::set<std::string> as;
  for (const auto& a : arrows) {
    if (!as.insert(a.id).second) throw bad_input("duplicate arrow id: " + a.id);
    if (!os.count(a.src) || !os.count(a.tgt))
      throw bad_input("arrow " + a.id + " has unknown endpoint");
  }
  for (const auto& o : objects) {
    auto it = identity.find(o);
    if (it == identity.end()) throw bad_input("missing identity at " + o);
    const Arrow& a = arrows.at(it->second);
    if (a.src != o || a.tgt != o)
      throw bad_input("identity of " + o + " has wrong endpoints");
  }
  for (std::size_t f = 0; f < arrows.size(); ++f)
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      bool composable = arrows[f].tgt == arrows[g].src;
      auto it = compose.find({f, g});
      if (composable != (it != compose.end()))
        throw bad_input("composition table does not match composability");
      if (composable) {
        const Arrow& h = arrows.at(it->second);
        if (h.src != arrows[f].src || h.tgt != arrows[g].tgt)
          throw bad_input("composite has wrong endpoints");
      }
    }
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    if (compose.at({identity.at(arrows[f].src), f}) != f)
      throw bad_input("left identity law fails at " + arrows[f].id);
    if (compose.at({f, identity.at(arrows[f].tgt)}) != f)
      throw bad_input("right identity law fails at " + arrows[f].id);
  }
  for (std::size_t f = 0; f < arrows.size(); ++f)
    for (std::size_t g = 0; g < arrows.size(); ++g)
      for (std::size_t h = 0; h < arrows.size(); ++h)
        if (arrows[f].tgt == arrows[g].src && arrows[g].tgt == arrows[h].src)
          if (compose.at({compose.at({f, g}), h}) !=
              compose.at({f, compose.at({g, h})}))
            throw bad_input("associativity fails on the table");
}

std::optional<std::size_t> FinCategory::comp(std::size_t f,
                                             std::size_t g) const {
  auto it = compose.find({f, g});
  if (it == compose.end()) return std::nullopt;
  return it->second;
}

namespace {

std::optional<std::size_t> two_sided_inverse(const FinCategory& c,
                                             std::size_t f) {
  for (std::size_t g = 0; g < c.arrows.size(); ++g) {
    auto fg = c.comp(f, g);
    auto gf = c.comp(g, f);
    if (fg && gf && *fg == c.identity.at(c.arrows[f].src) &&
        *gf == c.identity.at(c.arrows[g].src))
      return g;
  }
  return std::nullopt;
}

}  // namespace

FinCategory core_groupoid(const FinCategory& c) {
  c.validate();
  std::vector<std::size_t> keep;
  for (std::size_t f = 0; f < c.arrows.size(); ++f)
    if (two_sided_inverse(c, f)) keep.push_back(f);
  std::map<std::size_t, std::size_t> renum;
  for (std::size_t i = 0; i < keep.size(); ++i) renum[keep[i]] = i;
  FinCategory out;
  out.objects = c.objects;
  for (auto f : keep) out.arrows.push_back(c.arrows[f]);
  for (const auto& o : c.objects) out.identity[o] = renum.at(c.identity.at(o));
  for (auto f : keep)
    for (auto g : keep)
      if (auto fg = c.comp(f, g))
        out.compose[{renum.at(f), renum.at(g)}] = renum.at(*fg);
  out.validate();
  return out;
}

bool is_groupoid(const FinCategory& c) {
  for (std::size_t f = 0; f < c.arrows.size(); ++f)
    if (!two_sided_inverse(c, f)) return false;
  return true;
}

LinearizedCategory linearize(const FinCategory& c, const FieldSpec& f) {
  c.validate();
  LinearizedCategory out;
  SemiHopfCategory& s = out.shopf;
  s.cat.graph.objects = c.objects;
  s.cat.graph.field = f;
  std::map<ObjPair, std::vector<std::size_t>> arrows_of;
  out.basis_of_arrow.resize(c.arrows.size());
  for (std::size_t i = 0; i < c.arrows.size(); ++i) {
    ObjPair pr{c.arrows[i].src, c.arrows[i].tgt};
    out.basis_of_arrow[i] = {pr, arrows_of[pr].size()};
    arrows_of[pr].push_back(i);
  }
  for (const auto& x : c.objects)
    for (const auto& y : c.objects) {
      ObjPair pr{x, y};
      std::size_t d = arrows_of[pr].size();
      s.cat.graph.hom_dims[pr] = d;
      s.coalgebras[pr] = grouplike_coalgebra(d, f);
    }
  for (const auto& x : c.objects)
    for (const auto& y : c.objects)
      for (const auto& z : c.objects) {
        std::size_t dxy = arrows_of[{x, y}].size();
        std::size_t dyz = arrows_of[{y, z}].size();
        ExactMatrix m(arrows_of[{x, z}].size(), dxy * dyz, f);
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t k = 0; k < dyz; ++k) {
            std::size_t fg =
                *c.comp(arrows_of[{x, y}][i], arrows_of[{y, z}][k]);
            m.set(out.basis_of_arrow[fg].second, i * dyz + k, Scalar::one(f));
          }
        s.cat.m[{x, y, z}] = m;
      }
  for (const auto& x : c.objects) {
    ExactMatrix u(arrows_of[{x, x}].size(), 1, f);
    u.set(out.basis_of_arrow[c.identity.at(x)].second, 0, Scalar::one(f));
    s.cat.j[x] = u;
  }
  if (is_groupoid(c)) {
    std::map<ObjPair, ExactMatrix> inv;
    for (const auto& x : c.objects)
      for (const auto& y : c.objects) {
        ObjPair pr{x, y};
        ObjPair rp{y, x};
        ExactMatrix m(arrows_of[rp].size(), arrows_of[pr].size(), f);
        for (std::size_t i = 0; i < arrows_of[pr].size(); ++i) {
          std::size_t g = *two_sided_inverse(c, arrows_of[pr][i]);
          m.set(out.basis_of_arrow[g].second, i, Scalar::one(f));
        }
        inv[pr] = m;
      }
    out.inversion = std::move(inv);
  }
  return out;
}

}  // namespace hopfcat
