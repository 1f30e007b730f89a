#pragma once

// The group Gamma_0 = H^ x Z^2 x SL(2, Z) of a triplet (H, mu, chi), its action rho
// on the shift algebra, and the restriction beta to the zero-sum subalgebra.

#include <string>
#include <vector>

#include "tbs/algebra.hpp"

namespace tbs {

struct Triplet {
  AbGroup group;
  Cocycle mu;
  Character chi;
  std::string label;

  Triplet(AbGroup g, Cocycle m, Character c, std::string l = {});
  BasePtr base() const { return base_; }

 private:
  BasePtr base_;
};

struct Gamma0Elem {
  Character c;
  LatticePoint k;
  Matrix2 gamma;

  static Gamma0Elem identity(const AbGroup& G) { return {Character::trivial(G), {}, Matrix2{}}; }
  friend bool operator==(const Gamma0Elem& a, const Gamma0Elem& b) {
    return a.c == b.c && a.k == b.k && a.gamma == b.gamma;
  }
};

// (c1, k, g1)(c2, l, g2) = (c1 + c2 + det(k, g1 l) chi, k + g1 l, g1 g2)
Gamma0Elem gamma0_mul(const Triplet& t, const Gamma0Elem& a, const Gamma0Elem& b);

// rho(c) o rho(k) o rho(gamma), termwise.
AlgElem rho_apply(const Triplet& t, const Gamma0Elem& g, const AlgElem& x);
// rho(0, k, gamma) on a zero-sum-supported element.
AlgElem beta_apply(const Triplet& t, const AffineSL2& a, const AlgElem& x);

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
};

struct RelationSample {
  LatticePoint k, l;
  Matrix2 gamma;
  AlgElem x;
};

// rho(k) rho(l) = rho(det(k, l) chi) rho(k + l) and rho(gamma k) rho(gamma) = rho(gamma) rho(k).
RelationReport verify_rho_relations(const Triplet& t, const std::vector<RelationSample>& samples);

// First k in spiral order with tr(a_i beta(k)(a_j)) = tr(a_i) tr(a_j) for all pairs.
LatticePoint weak_mixing_witness(const Triplet& t, const std::vector<AlgElem>& elems);
bool is_weak_mixing_witness(const Triplet& t, const std::vector<AlgElem>& elems, const LatticePoint& k);

// A family of characters separating the H-values that occur in x: all characters
// for finite H, one per generator otherwise.
std::vector<Character> separating_characters(const AbGroup& G, const AlgElem& x);
// x is fixed by rho(c, 0, I) for every separating character.
bool fixed_by_dual_action(const Triplet& t, const AlgElem& x);

}  // namespace tbs
