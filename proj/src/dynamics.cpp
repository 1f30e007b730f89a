#include "tbs/dynamics.hpp"

#include <algorithm>
#include <cstdlib>

namespace tbs {

Triplet::Triplet(AbGroup g, Cocycle m, Character c, std::string l)
    : group(std::move(g)), mu(std::move(m)), chi(std::move(c)), label(std::move(l)) {
  if (group.is_trivial()) throw ValidationError("trivial_group", "/group", "the group H must be nonzero");
  if (!(mu.group() == group)) throw ValidationError("group_mismatch", "/cocycle", "cocycle is on a different group");
  if (!(chi.group() == group)) throw ValidationError("group_mismatch", "/character", "character is on a different group");
  base_ = make_base(group, mu);
}

Gamma0Elem gamma0_mul(const Triplet& t, const Gamma0Elem& a, const Gamma0Elem& b) {
  LatticePoint gl = a.gamma * b.k;
  return {a.c + b.c + t.chi.power(det2(a.k, gl)), a.k + gl, a.gamma * b.gamma};
}

AlgElem rho_apply(const Triplet& t, const Gamma0Elem& g, const AlgElem& x) {
  if (!same_base(x.base(), t.base())) throw InvalidArgument("element is not over the triplet's algebra");
  if (g.gamma.det() != 1) throw InvalidArgument("gamma must have determinant 1");
  if (!(g.c.group() == t.group)) throw InvalidArgument("character on a different group");
  AlgElem out(x.base());
  AffineSL2 lin = AffineSL2::linear(g.gamma);
  AffineSL2 shift = AffineSL2::translation(g.k);
  for (const auto& [lambda, coeff] : x.terms()) {
    OplusElem moved = act_on_oplus(lin, lambda);
    Phase ph;
    for (const auto& [m, v] : moved.support) {
      Int d = det2(g.k, m);
      if (d != 0) ph += t.chi(v).scaled(d);
    }
    ph += g.c(oplus_total(t.group, moved));
    out.add_term(act_on_oplus(shift, moved), coeff.times_root(ph));
  }
  return out;
}

AlgElem beta_apply(const Triplet& t, const AffineSL2& a, const AlgElem& x) {
  if (!is_lambda_supported(x)) throw InvalidArgument("beta acts on elements supported on zero-sum keys");
  return rho_apply(t, {Character::trivial(t.group), a.t(), a.m()}, x);
}

RelationReport verify_rho_relations(const Triplet& t, const std::vector<RelationSample>& samples) {
  RelationReport rep;
  Character one = Character::trivial(t.group);
  auto rho_k = [&](const LatticePoint& k, const AlgElem& x) { return rho_apply(t, {one, k, Matrix2{}}, x); };
  auto rho_g = [&](const Matrix2& g, const AlgElem& x) { return rho_apply(t, {one, LatticePoint{}, g}, x); };
  auto rho_c = [&](const Character& c, const AlgElem& x) { return rho_apply(t, {c, LatticePoint{}, Matrix2{}}, x); };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    ++rep.checked;
    AlgElem lhs = rho_k(s.k, rho_k(s.l, s.x));
    AlgElem rhs = rho_c(t.chi.power(det2(s.k, s.l)), rho_k(s.k + s.l, s.x));
    if (!(lhs == rhs)) {
      rep.ok = false;
      rep.counterexamples.push_back("translation relation fails at sample " + std::to_string(i) + " k=" + s.k.str() +
                                    " l=" + s.l.str());
    }
    AlgElem lhs2 = rho_k(s.gamma * s.k, rho_g(s.gamma, s.x));
    AlgElem rhs2 = rho_g(s.gamma, rho_k(s.k, s.x));
    if (!(lhs2 == rhs2)) {
      rep.ok = false;
      rep.counterexamples.push_back("covariance relation fails at sample " + std::to_string(i) + " k=" + s.k.str() +
                                    " gamma=" + s.gamma.str());
    }
  }
  return rep;
}

bool is_weak_mixing_witness(const Triplet& t, const std::vector<AlgElem>& elems, const LatticePoint& k) {
  Gamma0Elem shift{Character::trivial(t.group), k, Matrix2{}};
  for (const auto& aj : elems) {
    AlgElem moved = rho_apply(t, shift, aj);
    for (const auto& ai : elems) {
      if (!((ai * moved).trace() == ai.trace() * aj.trace())) return false;
    }
  }
  return true;
}

LatticePoint weak_mixing_witness(const Triplet& t, const std::vector<AlgElem>& elems) {
  // Beyond twice the largest support coordinate every shift separates supports.
  Int reach = 0;
  for (const auto& a : elems)
    for (const auto& [lambda, c] : a.terms())
      for (const auto& [m, v] : lambda.support) reach = std::max({reach, Int(abs(m.q)), Int(abs(m.r))});
  if (!reach.fits_slong_p() || reach > 100000) throw Unsupported("supports too spread out for the witness search");
  long radius = 2 * reach.get_si() + 1;
  std::size_t limit = static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1));
  for (std::size_t i = 0; i < limit; ++i) {
    LatticePoint k = spiral_point(i);
    if (is_weak_mixing_witness(t, elems, k)) return k;
  }
  throw Error("no weak mixing witness found inside the search window");
}

std::vector<Character> separating_characters(const AbGroup& G, const AlgElem& x) {
  if (G.is_finite()) return all_characters(G);
  std::int64_t reach = 0;
  for (const auto& [lambda, c] : x.terms()) {
    AbElem tot = oplus_total(G, lambda);
    for (std::size_t i = 0; i < static_cast<std::size_t>(G.free_rank()); ++i)
      reach = std::max(reach, static_cast<std::int64_t>(std::llabs(tot.coords[i])));
  }
  std::vector<Character> out;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    std::vector<Phase> p(G.rank());
    std::int64_t n = G.modulus(i);
    p[i] = Phase(1, n ? n : 2 * reach + 1);
    out.emplace_back(G, std::move(p));
  }
  return out;
}

bool fixed_by_dual_action(const Triplet& t, const AlgElem& x) {
  for (const auto& c : separating_characters(t.group, x)) {
    if (!(rho_apply(t, {c, LatticePoint{}, Matrix2{}}, x) == x)) return false;
  }
  return true;
}

}  // namespace tbs
