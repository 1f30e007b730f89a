#include "tbs/algebra.hpp"

namespace tbs {

BasePtr make_base(const AbGroup& G, const Cocycle& mu) {
  if (!(mu.group() == G)) throw InvalidArgument("cocycle is defined on a different group");
  return std::make_shared<const AlgBase>(AlgBase{G, mu});
}

bool same_base(const BasePtr& a, const BasePtr& b) {
  return a == b || (a && b && a->group == b->group && a->mu == b->mu);
}

AlgElem restrict_to_lambda(const AlgElem& a) {
  AlgElem out(a.base());
  for (const auto& [k, c] : a.terms())
    if (is_zero_sum(a.base()->group, k)) out.add_term(k, c);
  return out;
}

bool is_lambda_supported(const AlgElem& a) {
  for (const auto& [k, c] : a.terms())
    if (!is_zero_sum(a.base()->group, k)) return false;
  return true;
}

AlgElem u_of(const BasePtr& base, const OplusElem& lambda) { return AlgElem::unit(base, lambda); }

TensorElem u_tensor(const BasePtr& base, const AbElem& g, const AbElem& h) { return TensorElem::unit(base, {g, h}); }

TensorElem malleability_unitary(const BasePtr& base) {
  const AbGroup& G = base->group;
  if (!G.is_finite()) throw Unsupported("the malleability unitary needs a finite group");
  Nondegeneracy nd = is_nondegenerate(base->mu);
  if (!nd.nondegenerate) {
    std::string w;
    for (auto c : nd.witness->coords) w += (w.empty() ? "" : ",") + std::to_string(c);
    throw InvalidArgument("cocycle is degenerate: g = (" + w + ") commutes with every u_h");
  }
  TensorElem v(base);
  for (const auto& h : G.elements()) {
    AbElem nh = G.neg(h);
    // u_h (x) u_h^* = conj(mu(h, -h)) u_h (x) u_{-h}
    v.add_term({h, nh}, Cyclotomic::root_of_unity(-base->mu(h, nh)));
  }
  return v;
}

MalleabilityFlow::MalleabilityFlow(BasePtr base)
    : base_(std::move(base)), v_(malleability_unitary(base_)) {
  Int n(static_cast<long>(base_->group.order()));
  if (!mpz_perfect_square_p(n.get_mpz_t())) throw Unsupported("|H| is not a perfect square");
  mpz_sqrt(s_.get_mpz_t(), n.get_mpz_t());
}

TensorElem MalleabilityFlow::w(const Rational& t) const {
  Cyclotomic c = Cyclotomic::root_of_unity(Phase::from_rational(t / 2));
  Rational half(1, 2);
  Cyclotomic a = (Cyclotomic(1L) + c) * half;
  Cyclotomic b = (Cyclotomic(1L) - c) * Rational(Int(1), Int(2 * s_));
  return TensorElem::one(base_).scaled(a) + v_.scaled(b);
}

TensorElem MalleabilityFlow::apply(const Rational& t, const TensorElem& x) const {
  TensorElem wt = w(t);
  return wt * x * wt.star();
}

}  // namespace tbs
