#pragma once

// Finite formal sums sum_x c(x) u_x in twisted group algebras, with exact
// cyclotomic coefficients:
//   AlgElem       over the shift group (keys: finitely supported maps Z^2 -> H),
//   GroupAlgElem  over H itself,
//   TensorElem    over H x H (the algebraic tensor square).

#include <map>
#include <memory>
#include <utility>

#include "tbs/errors.hpp"
#include "tbs/lambda.hpp"

namespace tbs {

struct AlgBase {
  AbGroup group;
  Cocycle mu;
};
using BasePtr = std::shared_ptr<const AlgBase>;

BasePtr make_base(const AbGroup& G, const Cocycle& mu);
bool same_base(const BasePtr& a, const BasePtr& b);

struct OplusTraits {
  using Key = OplusElem;
  static Key zero(const AlgBase&) { return {}; }
  static bool is_zero(const AlgBase&, const Key& k) { return k.is_zero(); }
  static Key add(const AlgBase& b, const Key& x, const Key& y) { return oplus_add(b.group, x, y); }
  static Key neg(const AlgBase& b, const Key& x) { return oplus_neg(b.group, x); }
  static Phase twist(const AlgBase& b, const Key& x, const Key& y) { return mu_tilde(b.mu, x, y); }
  static AbElem total(const AlgBase& b, const Key& x) { return oplus_total(b.group, x); }
};

struct GroupTraits {
  using Key = AbElem;
  static Key zero(const AlgBase& b) { return b.group.zero(); }
  static bool is_zero(const AlgBase& b, const Key& k) { return b.group.is_zero(k); }
  static Key add(const AlgBase& b, const Key& x, const Key& y) { return b.group.add(x, y); }
  static Key neg(const AlgBase& b, const Key& x) { return b.group.neg(x); }
  static Phase twist(const AlgBase& b, const Key& x, const Key& y) { return b.mu(x, y); }
  static AbElem total(const AlgBase&, const Key& x) { return x; }
};

struct TensorTraits {
  using Key = std::pair<AbElem, AbElem>;
  static Key zero(const AlgBase& b) { return {b.group.zero(), b.group.zero()}; }
  static bool is_zero(const AlgBase& b, const Key& k) { return b.group.is_zero(k.first) && b.group.is_zero(k.second); }
  static Key add(const AlgBase& b, const Key& x, const Key& y) {
    return {b.group.add(x.first, y.first), b.group.add(x.second, y.second)};
  }
  static Key neg(const AlgBase& b, const Key& x) { return {b.group.neg(x.first), b.group.neg(x.second)}; }
  static Phase twist(const AlgBase& b, const Key& x, const Key& y) {
    return b.mu(x.first, y.first) + b.mu(x.second, y.second);
  }
  static AbElem total(const AlgBase& b, const Key& x) { return b.group.add(x.first, x.second); }
};

template <class Traits>
class TwistedSum {
 public:
  using Key = typename Traits::Key;
  using Terms = std::map<Key, Cyclotomic>;

  explicit TwistedSum(BasePtr base) : base_(std::move(base)) {}
  static TwistedSum unit(BasePtr base, Key key, Cyclotomic coeff = Cyclotomic(1L)) {
    TwistedSum s(std::move(base));
    s.add_term(std::move(key), coeff);
    return s;
  }
  static TwistedSum one(BasePtr base) {
    Key k = Traits::zero(*base);
    return unit(std::move(base), std::move(k));
  }

  const BasePtr& base() const noexcept { return base_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(Key key, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TwistedSum operator+(const TwistedSum& o) const {
    check(o);
    TwistedSum out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
  }
  TwistedSum operator-() const {
    TwistedSum out(base_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }
  TwistedSum operator-(const TwistedSum& o) const { return *this + (-o); }
  TwistedSum scaled(const Cyclotomic& s) const {
    TwistedSum out(base_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
  }

  // u_x u_y = twist(x, y) u_{x+y}
  TwistedSum operator*(const TwistedSum& o) const {
    check(o);
    TwistedSum out(base_);
    for (const auto& [x, a] : terms_)
      for (const auto& [y, b] : o.terms_)
        out.add_term(Traits::add(*base_, x, y), (a * b).times_root(Traits::twist(*base_, x, y)));
    return out;
  }

  // u_x^* = conj(twist(x, -x)) u_{-x}
  TwistedSum star() const {
    TwistedSum out(base_);
    for (const auto& [x, a] : terms_) {
      Key nx = Traits::neg(*base_, x);
      Phase ph = -Traits::twist(*base_, x, nx);
      out.add_term(std::move(nx), a.conj().times_root(ph));
    }
    return out;
  }

  Cyclotomic trace() const {
    auto it = terms_.find(Traits::zero(*base_));
    return it == terms_.end() ? Cyclotomic() : it->second;
  }

  // Each term scaled by c evaluated on the total H-content of its key.
  TwistedSum character_action(const Character& c) const {
    if (!(c.group() == base_->group)) throw InvalidArgument("character on a different group");
    TwistedSum out(base_);
    for (const auto& [x, a] : terms_) out.terms_.emplace(x, a.times_root(c(Traits::total(*base_, x))));
    return out;
  }

  friend bool operator==(const TwistedSum& a, const TwistedSum& b) {
    return same_base(a.base_, b.base_) && a.terms_ == b.terms_;
  }

 private:
  void check(const TwistedSum& o) const {
    if (!same_base(base_, o.base_)) throw InvalidArgument("algebra elements over different bases");
  }

  BasePtr base_;
  Terms terms_;
};

using AlgElem = TwistedSum<OplusTraits>;
using GroupAlgElem = TwistedSum<GroupTraits>;
using TensorElem = TwistedSum<TensorTraits>;

inline AlgElem alg_mul(const AlgElem& a, const AlgElem& b) { return a * b; }
inline AlgElem alg_star(const AlgElem& a) { return a.star(); }
inline Cyclotomic alg_trace(const AlgElem& a) { return a.trace(); }
inline TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) { return a * b; }
inline TensorElem tensor_star(const TensorElem& a) { return a.star(); }
template <class T>
TwistedSum<T> diagonal_character_action(const Character& c, const TwistedSum<T>& x) {
  return x.character_action(c);
}

// Keeps the terms whose key has total sum zero.
AlgElem restrict_to_lambda(const AlgElem& a);
bool is_lambda_supported(const AlgElem& a);

// V = sum_h u_h (x) u_h^*, which is sqrt|H| times the self-adjoint unitary U.
// Requires H finite and mu nondegenerate.
TensorElem malleability_unitary(const BasePtr& base);

// alpha_t = Ad(P_1 + e^{i pi t} P_{-1}) with P_{+-1} = (1 +- U)/2, U = V / sqrt|H|.
// |H| must be a perfect square (true whenever mu is nondegenerate).
class MalleabilityFlow {
 public:
  explicit MalleabilityFlow(BasePtr base);

  const TensorElem& v() const noexcept { return v_; }
  const Int& sqrt_order() const noexcept { return s_; }
  TensorElem w(const Rational& t) const;  // P_1 + e^{i pi t} P_{-1}
  TensorElem apply(const Rational& t, const TensorElem& x) const;

 private:
  BasePtr base_;
  TensorElem v_;
  Int s_;
};

// Basis helpers.
AlgElem u_of(const BasePtr& base, const OplusElem& lambda);
TensorElem u_tensor(const BasePtr& base, const AbElem& g, const AbElem& h);

}  // namespace tbs
