#pragma once

// Finitely supported maps Z^2 -> H (the group of the Bernoulli shift) and the
// zero-sum subgroup Lambda(H).

#include <utility>
#include <vector>

#include "tbs/abelian.hpp"
#include "tbs/cocycle.hpp"
#include "tbs/lattice.hpp"

namespace tbs {

// Support sorted lexicographically by lattice point; no zero values stored.
struct OplusElem {
  std::vector<std::pair<LatticePoint, AbElem>> support;

  bool is_zero() const { return support.empty(); }
  const AbElem* at(const LatticePoint& k) const;

  friend bool operator==(const OplusElem& a, const OplusElem& b) { return a.support == b.support; }
  friend bool operator<(const OplusElem& a, const OplusElem& b);
};

// Builds an element from arbitrary (point, value) pairs; values at repeated
// points are added, zeros dropped.
OplusElem make_oplus(const AbGroup& G, std::vector<std::pair<LatticePoint, AbElem>> entries);

OplusElem oplus_add(const AbGroup& G, const OplusElem& a, const OplusElem& b);
OplusElem oplus_neg(const AbGroup& G, const OplusElem& a);
OplusElem oplus_sub(const AbGroup& G, const OplusElem& a, const OplusElem& b);
AbElem oplus_total(const AbGroup& G, const OplusElem& a);  // sum of all values
bool is_zero_sum(const AbGroup& G, const OplusElem& a);

// (a . lambda)(k) = lambda(a^{-1} k): the support point k moves to a k.
OplusElem act_on_oplus(const AffineSL2& a, const OplusElem& lambda);
OplusElem apply_pointwise(const AbHom& f, const OplusElem& lambda);  // f o lambda

// sum_k mu(lambda1(k), lambda2(k))
Phase mu_tilde(const Cocycle& mu, const OplusElem& a, const OplusElem& b);
// sum_j mu(lambda(k_0) + ... + lambda(k_{j-1}), lambda(k_j)) along a fixed
// enumeration of Z^2 (the spiral order by default).
Phase mu_hat(const Cocycle& mu, const OplusElem& lambda, LatticeOrder order = LatticeOrder::Spiral);

// {0 -> -h, e1 -> h}
OplusElem lambda_h(const AbGroup& G, const AbElem& h);
// Every support point lies on the horizontal axis.
bool supported_on_D(const OplusElem& lambda);

}  // namespace tbs
