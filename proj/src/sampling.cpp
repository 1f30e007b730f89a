#include "tbs/sampling.hpp"

#include <numeric>

namespace tbs {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Phase Sampler::phase(std::int64_t max_den) {
  std::int64_t d = uniform(1, max_den);
  return Phase(uniform(0, d - 1), d);
}

LatticePoint Sampler::point(std::int64_t box) { return {uniform(-box, box), uniform(-box, box)}; }

AbElem Sampler::element(const AbGroup& G, std::int64_t free_box) {
  std::vector<std::int64_t> c(G.rank());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t m = G.modulus(i);
    c[i] = m ? uniform(0, m - 1) : uniform(-free_box, free_box);
  }
  return AbElem{std::move(c)};
}

AbElem Sampler::nonzero_element(const AbGroup& G, std::int64_t free_box) {
  for (;;) {
    AbElem g = element(G, free_box);
    if (!G.is_zero(g)) return g;
  }
}

Matrix2 Sampler::sl2(int word_length) {
  static const Matrix2 gens[3] = {make_matrix(0, -1, 1, 0), make_matrix(1, 1, 0, 1), make_matrix(1, -1, 0, 1)};
  Matrix2 m;
  for (int i = 0; i < word_length; ++i) m = m * gens[uniform(0, 2)];
  return m;
}

AffineSL2 Sampler::affine(std::int64_t box, int word_length) {
  LatticePoint t = point(box);
  return AffineSL2(t, sl2(word_length));
}

OplusElem Sampler::oplus(const AbGroup& G, std::int64_t box, int max_points) {
  int n = static_cast<int>(uniform(1, max_points));
  std::vector<std::pair<LatticePoint, AbElem>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(point(box), element(G));
  return make_oplus(G, std::move(e));
}

OplusElem Sampler::lambda(const AbGroup& G, std::int64_t box, int max_points) {
  int n = static_cast<int>(uniform(1, max_points));
  std::vector<std::pair<LatticePoint, AbElem>> e;
  AbElem sum = G.zero();
  for (int i = 0; i + 1 < n; ++i) {
    AbElem v = element(G);
    sum = G.add(sum, v);
    e.emplace_back(point(box), std::move(v));
  }
  e.emplace_back(point(box), G.neg(sum));
  if (n == 1) {
    // a two-point element keeps single draws interesting
    AbElem v = nonzero_element(G);
    e = {{point(box), v}, {point(box), G.neg(v)}};
  }
  return make_oplus(G, std::move(e));
}

Cyclotomic Sampler::coefficient() {
  static const std::int64_t dens[] = {1, 2, 3, 4, 6, 12};
  std::int64_t d = dens[uniform(0, 5)];
  Rational r(uniform(1, 3) * (uniform(0, 1) ? 1 : -1), uniform(1, 2));
  r.canonicalize();
  return Cyclotomic::root_of_unity(Phase(uniform(0, d - 1), d)) * r;
}

AlgElem Sampler::alg_elem(const BasePtr& base, std::int64_t box, int max_terms, bool zero_sum) {
  AlgElem x(base);
  int n = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < n; ++i) {
    OplusElem k = zero_sum ? lambda(base->group, box) : oplus(base->group, box);
    x.add_term(std::move(k), coefficient());
  }
  return x;
}

GroupAlgElem Sampler::group_alg_elem(const BasePtr& base, int max_terms) {
  GroupAlgElem x(base);
  int n = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < n; ++i) x.add_term(element(base->group), coefficient());
  return x;
}

TensorElem Sampler::tensor_elem(const BasePtr& base, int max_terms) {
  TensorElem x(base);
  int n = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < n; ++i) x.add_term({element(base->group), element(base->group)}, coefficient());
  return x;
}

Cocycle Sampler::random_bichar(const AbGroup& G) {
  std::size_t r = G.rank();
  PhaseMatrix B(r, std::vector<Phase>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t g = std::gcd(G.modulus(i), G.modulus(j));
      if (g == 0) g = 12;
      B[i][j] = Phase(uniform(0, g - 1), g);
    }
  return Cocycle::bichar(G, std::move(B));
}

std::vector<Phase> Sampler::random_function(const AbGroup& G, std::int64_t max_den) {
  std::size_t n = static_cast<std::size_t>(G.order());
  std::vector<Phase> b(n);
  std::size_t zero = G.index_of(G.zero());
  for (std::size_t i = 0; i < n; ++i)
    if (i != zero) b[i] = phase(max_den);
  return b;
}

Cocycle add_coboundary(const Cocycle& mu, const std::vector<Phase>& b) {
  const AbGroup& G = mu.group();
  std::vector<AbElem> elems = G.elements();
  std::size_t n = elems.size();
  std::vector<Phase> v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      v[i * n + j] = mu(elems[i], elems[j]) + b[i] + b[j] - b[G.index_of(G.add(elems[i], elems[j]))];
  return Cocycle::table(G, std::move(v));
}

}  // namespace tbs
