#pragma once

// Seeded random objects for property checks. Everything derives from one
// mt19937_64 stream, so a seed fixes every sample.

#include <random>

#include "tbs/algebra.hpp"

namespace tbs {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  Phase phase(std::int64_t max_den);
  LatticePoint point(std::int64_t box);                     // coordinates in [-box, box]
  AbElem element(const AbGroup& G, std::int64_t free_box = 3);
  AbElem nonzero_element(const AbGroup& G, std::int64_t free_box = 3);
  Matrix2 sl2(int word_length = 4);  // product of random S, T, T^-1
  AffineSL2 affine(std::int64_t box = 3, int word_length = 4);

  // Zero-sum map with up to max_points support points in [-box, box]^2.
  OplusElem lambda(const AbGroup& G, std::int64_t box, int max_points = 3);
  // Arbitrary finitely supported map.
  OplusElem oplus(const AbGroup& G, std::int64_t box, int max_points = 3);
  Cyclotomic coefficient();
  AlgElem alg_elem(const BasePtr& base, std::int64_t box, int max_terms = 2, bool zero_sum = true);
  GroupAlgElem group_alg_elem(const BasePtr& base, int max_terms = 3);
  TensorElem tensor_elem(const BasePtr& base, int max_terms = 3);

  // Bicharacter with entries well defined on G (finite G), every entry random.
  Cocycle random_bichar(const AbGroup& G);
  // A random function b: G -> Q/Z with b(0) = 0, indexed by index_of.
  std::vector<Phase> random_function(const AbGroup& G, std::int64_t max_den);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Table of mu plus the coboundary of b: mu(g, h) + b(g) + b(h) - b(g + h).
Cocycle add_coboundary(const Cocycle& mu, const std::vector<Phase>& b);

}  // namespace tbs
