#include "catgsb/monotone.hpp"

#include <algorithm>

#include "catgsb/order.hpp"

namespace catgsb {

MonotoneMap::MonotoneMap(int domain_dim, int codomain_dim,
                         std::vector<int> values)
    : q_(domain_dim), p_(codomain_dim), values_(std::move(values)) {
  if (q_ < 0 || p_ < 0)
    throw Error("monotone map dimensions must be non-negative");
  if (values_.size() != static_cast<std::size_t>(q_) + 1)
    throw Error("monotone map needs q+1 values");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > p_)
      throw Error("monotone map value out of range");
    if (k && values_[k - 1] > values_[k])
      throw Error("map values are not weakly increasing");
  }
}

MonotoneMap MonotoneMap::identity(int q) {
  std::vector<int> v(static_cast<std::size_t>(q) + 1);
  for (int j = 0; j <= q; ++j) v[static_cast<std::size_t>(j)] = j;
  return MonotoneMap(q, q, std::move(v));
}

MonotoneMap face_map(int q, int i) {
  if (q < 1 || i < 0 || i > q) throw Error("face map index out of range");
  std::vector<int> v(static_cast<std::size_t>(q));
  for (int j = 0; j <= q - 1; ++j)
    v[static_cast<std::size_t>(j)] = i > j ? j : j + 1;
  return MonotoneMap(q - 1, q, std::move(v));
}

MonotoneMap degeneracy_map(int q, int i) {
  if (q < 0 || i < 0 || i > q) throw Error("degeneracy map index out of range");
  std::vector<int> v(static_cast<std::size_t>(q) + 2);
  for (int j = 0; j <= q + 1; ++j)
    v[static_cast<std::size_t>(j)] = i >= j ? j : j - 1;
  return MonotoneMap(q + 1, q, std::move(v));
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (inner.codomain_dim() != outer.domain_dim())
    throw Error("monotone maps are not composable");
  std::vector<int> v(static_cast<std::size_t>(inner.domain_dim()) + 1);
  for (int j = 0; j <= inner.domain_dim(); ++j)
    v[static_cast<std::size_t>(j)] = outer(inner(j));
  return MonotoneMap(inner.domain_dim(), outer.codomain_dim(), std::move(v));
}

MonotoneMap eval_word(const Quiver& q, const Word& w) {
  int src_dim = q.vertex(w.source()).dim;
  if (src_dim < 0)
    throw Error("eval_word needs dimension-labelled vertices");
  MonotoneMap cur = MonotoneMap::identity(src_dim);
  for (std::size_t k = w.size(); k-- > 0;) {
    const Edge& e = q.edge(w.edge_at(k));
    auto gen = parse_generator_name(e.name);
    if (!gen || gen->fam == FamilyGen::Fam::t)
      throw Error("word contains non-simplicial edge '" + e.name + "'");
    MonotoneMap g = gen->fam == FamilyGen::Fam::eps
                        ? face_map(gen->level, gen->index)
                        : degeneracy_map(gen->level, gen->index);
    cur = compose(g, cur);
  }
  return cur;
}

std::vector<MonotoneMap> enumerate_monotone(int q, int p) {
  if (q < 0 || p < 0) throw Error("dimensions must be non-negative");
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(q) + 1, 0);
  for (;;) {
    if (std::is_sorted(v.begin(), v.end()))
      out.push_back(MonotoneMap(q, p, v));
    // odometer over all (p+1)^(q+1) tuples
    std::size_t k = v.size();
    while (k > 0) {
      --k;
      if (v[k] < p) {
        ++v[k];
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(k) + 1, v.end(), 0);
        break;
      }
      if (k == 0) return out;
    }
  }
}

Word factorize(const Quiver& quiver, const MonotoneMap& mu) {
  const int q = mu.domain_dim();
  const int p = mu.codomain_dim();
  std::vector<char> hit(static_cast<std::size_t>(p) + 1, 0);
  for (int j = 0; j <= q; ++j) hit[static_cast<std::size_t>(mu(j))] = 1;
  std::vector<int> missing;  // strictly decreasing
  for (int v = p; v >= 0; --v)
    if (!hit[static_cast<std::size_t>(v)]) missing.push_back(v);
  std::vector<int> degen;  // strictly increasing
  for (int j = 0; j < q; ++j)
    if (mu(j) == mu(j + 1)) degen.push_back(j);

  const int m = static_cast<int>(missing.size());
  const int n = static_cast<int>(degen.size());
  std::vector<EdgeId> edges;
  for (int k = 0; k < m; ++k) {
    std::string nm = "E(" + std::to_string(p - k) + "," +
                     std::to_string(missing[static_cast<std::size_t>(k)]) + ")";
    auto e = quiver.find_edge(nm);
    if (!e) throw Error("factorize: quiver is missing edge " + nm);
    edges.push_back(*e);
  }
  for (int k = 0; k < n; ++k) {
    std::string nm = "H(" + std::to_string(q - n + k) + "," +
                     std::to_string(degen[static_cast<std::size_t>(k)]) + ")";
    auto e = quiver.find_edge(nm);
    if (!e) throw Error("factorize: quiver is missing edge " + nm);
    edges.push_back(*e);
  }
  if (edges.empty()) {
    auto v = quiver.find_vertex(std::to_string(q));
    if (!v) throw Error("factorize: quiver is missing vertex " + std::to_string(q));
    return Word::identity(*v);
  }
  return Word::from_edges(quiver, std::move(edges));
}

}  // namespace catgsb
