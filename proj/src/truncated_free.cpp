#include "hopfcat/truncated_free.hpp"

namespace hopfcat {

namespace {

// All chains x -> y of length l with every letter hom nonzero, in
// enumeration order (intermediates scanned in object-list order).
void enumerate_chains(const VGraph& g, const std::string& x,
                      const std::string& y, std::size_t l,
                      std::vector<std::string>& via,
                      std::vector<std::vector<std::string>>& out) {
  if (via.size() + 1 == l) {
    const std::string& last = via.empty() ? x : via.back();
    if (g.dim(last, y) > 0) out.push_back(via);
    return;
  }
  const std::string last = via.empty() ? x : via.back();
  for (const auto& z : g.objects) {
    if (g.dim(last, z) == 0) continue;
    via.push_back(z);
    enumerate_chains(g, x, y, l, via, out);
    via.pop_back();
  }
}

}  // namespace

VGraph TruncatedFreeCat::hom_graph() const {
  VGraph h;
  h.objects = base.objects;
  h.field = base.field;
  for (const auto& [pr, d] : dims) h.hom_dims[pr] = d;
  return h;
}

std::pair<const TruncatedFreeCat::Segment*, std::size_t>
TruncatedFreeCat::locate(const std::string& x, const std::string& y,
                         std::size_t idx) const {
  for (const auto& seg : segments.at({x, y}))
    if (idx >= seg.offset && idx < seg.offset + seg.dim)
      return {&seg, idx - seg.offset};
  throw bad_input("basis index out of range");
}

std::optional<std::size_t> TruncatedFreeCat::compose_basis(
    const std::string& x, const std::string& y, const std::string& z,
    std::size_t i, std::size_t k) const {
  auto [s1, t1] = locate(x, y, i);
  auto [s2, t2] = locate(y, z, k);
  std::size_t l = s1->length + s2->length;
  if (l > max_len) return std::nullopt;
  std::vector<std::string> via = s1->via;
  if (s1->length > 0 && s2->length > 0) via.push_back(y);
  via.insert(via.end(), s2->via.begin(), s2->via.end());
  for (const auto& seg : segments.at({x, z}))
    if (seg.length == l && seg.via == via)
      return seg.offset + t1 * s2->dim + t2;
  throw bad_input("internal: concatenated chain not found");
}

TruncatedFreeCat free_vcategory_truncated(const VGraph& g,
                                          std::size_t max_len) {
  g.validate();
  TruncatedFreeCat t;
  t.base = g;
  t.max_len = max_len;
  for (const auto& x : g.objects)
    for (const auto& y : g.objects) {
      ObjPair pr{x, y};
      std::size_t off = 0;
      auto& segs = t.segments[pr];
      if (x == y) segs.push_back({0, {}, off++, 1, {}});
      for (std::size_t l = 1; l <= max_len; ++l) {
        std::vector<std::vector<std::string>> chains;
        std::vector<std::string> via;
        enumerate_chains(g, x, y, l, via, chains);
        for (const auto& c : chains) {
          TruncatedFreeCat::Segment s;
          s.length = l;
          s.via = c;
          s.offset = off;
          s.dim = 1;
          std::string prev = x;
          for (std::size_t i = 0; i <= c.size(); ++i) {
            const std::string& next = i < c.size() ? c[i] : y;
            s.letter_dims.push_back(g.dim(prev, next));
            s.dim *= s.letter_dims.back();
            prev = next;
          }
          off += s.dim;
          segs.push_back(std::move(s));
        }
      }
      t.dims[pr] = off;
    }
  return t;
}

TruncatedFreeSemiHopf free_semihopf_truncated(
    const VGraph& g, const std::map<ObjPair, Coalgebra>& letters,
    std::size_t max_len) {
  for (const auto& x : g.objects)
    for (const auto& y : g.objects) {
      if (g.dim(x, y) == 0) continue;
      auto it = letters.find({x, y});
      if (it == letters.end() || it->second.dim != g.dim(x, y))
        throw bad_input("missing or mismatched letter coalgebra at (" + x +
                        ", " + y + ")");
      auto rep = check_coalgebra(it->second);
      if (!rep.empty())
        throw bad_input("invalid letter coalgebra at (" + x + ", " + y +
                        "): " + rep.front());
    }
  TruncatedFreeSemiHopf out;
  out.cat = free_vcategory_truncated(g, max_len);
  const FieldSpec& f = g.field;
  for (const auto& x : g.objects)
    for (const auto& y : g.objects) {
      ObjPair pr{x, y};
      std::size_t d = out.cat.dims[pr];
      Coalgebra hom;
      hom.dim = d;
      hom.delta = ExactMatrix(d * d, d, f);
      hom.epsilon = ExactMatrix(1, d, f);
      for (const auto& seg : out.cat.segments[pr]) {
        // Tensor-product coalgebra of the chain's letters.
        Coalgebra chain = trivial_coalgebra(f);
        std::string prev = x;
        for (std::size_t i = 0; i <= seg.via.size() && seg.length > 0; ++i) {
          const std::string& next = i < seg.via.size() ? seg.via[i] : y;
          chain = i == 0 ? letters.at({prev, next})
                         : tensor_coalgebra(chain, letters.at({prev, next}));
          prev = next;
        }
        for (std::size_t c = 0; c < seg.dim; ++c) {
          for (std::size_t i = 0; i < seg.dim; ++i)
            for (std::size_t jj = 0; jj < seg.dim; ++jj) {
              const Scalar& v = chain.delta.at(i * seg.dim + jj, c);
              if (!v.is_zero())
                hom.delta.set((seg.offset + i) * d + (seg.offset + jj),
                              seg.offset + c, v);
            }
          hom.epsilon.set(0, seg.offset + c, chain.epsilon.at(0, c));
        }
      }
      out.coalgebras[pr] = hom;
    }
  return out;
}

}  // namespace hopfcat
