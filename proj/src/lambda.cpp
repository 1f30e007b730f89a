#include "tbs/lambda.hpp"

#include <algorithm>
#include <map>

#include "tbs/errors.hpp"

namespace tbs {

const AbElem* OplusElem::at(const LatticePoint& k) const {
  auto it = std::lower_bound(support.begin(), support.end(), k,
                             [](const auto& e, const LatticePoint& p) { return e.first < p; });
  return it != support.end() && it->first == k ? &it->second : nullptr;
}

bool operator<(const OplusElem& a, const OplusElem& b) {
  return std::lexicographical_compare(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first < y.first) return true;
                                        if (y.first < x.first) return false;
                                        return x.second < y.second;
                                      });
}

OplusElem make_oplus(const AbGroup& G, std::vector<std::pair<LatticePoint, AbElem>> entries) {
  std::map<LatticePoint, AbElem> acc;
  for (auto& [k, v] : entries) {
    if (!G.contains(v)) throw InvalidArgument("value at " + k.str() + " is not in the group");
    auto it = acc.find(k);
    if (it == acc.end()) {
      acc.emplace(k, std::move(v));
    } else {
      it->second = G.add(it->second, v);
    }
  }
  OplusElem out;
  for (auto& [k, v] : acc)
    if (!G.is_zero(v)) out.support.emplace_back(k, std::move(v));
  return out;
}

OplusElem oplus_add(const AbGroup& G, const OplusElem& a, const OplusElem& b) {
  OplusElem out;
  auto i = a.support.begin(), j = b.support.begin();
  while (i != a.support.end() || j != b.support.end()) {
    if (j == b.support.end() || (i != a.support.end() && i->first < j->first)) {
      out.support.push_back(*i++);
    } else if (i == a.support.end() || j->first < i->first) {
      out.support.push_back(*j++);
    } else {
      AbElem s = G.add(i->second, j->second);
      if (!G.is_zero(s)) out.support.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

OplusElem oplus_neg(const AbGroup& G, const OplusElem& a) {
  OplusElem out = a;
  for (auto& e : out.support) e.second = G.neg(e.second);
  return out;
}

OplusElem oplus_sub(const AbGroup& G, const OplusElem& a, const OplusElem& b) {
  return oplus_add(G, a, oplus_neg(G, b));
}

AbElem oplus_total(const AbGroup& G, const OplusElem& a) {
  AbElem s = G.zero();
  for (const auto& e : a.support) s = G.add(s, e.second);
  return s;
}

bool is_zero_sum(const AbGroup& G, const OplusElem& a) { return G.is_zero(oplus_total(G, a)); }

OplusElem act_on_oplus(const AffineSL2& a, const OplusElem& lambda) {
  OplusElem out;
  out.support.reserve(lambda.support.size());
  for (const auto& [k, v] : lambda.support) out.support.emplace_back(affine_act(a, k), v);
  std::sort(out.support.begin(), out.support.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

OplusElem apply_pointwise(const AbHom& f, const OplusElem& lambda) {
  std::vector<std::pair<LatticePoint, AbElem>> entries;
  for (const auto& [k, v] : lambda.support) entries.emplace_back(k, f.apply(v));
  return make_oplus(f.target(), std::move(entries));
}

Phase mu_tilde(const Cocycle& mu, const OplusElem& a, const OplusElem& b) {
  Phase acc;
  auto i = a.support.begin(), j = b.support.begin();
  while (i != a.support.end() && j != b.support.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += mu(i->second, j->second);
      ++i;
      ++j;
    }
  }
  return acc;
}

Phase mu_hat(const Cocycle& mu, const OplusElem& lambda, LatticeOrder order) {
  if (lambda.support.empty()) return {};
  const AbGroup& G = mu.group();
  std::vector<const std::pair<LatticePoint, AbElem>*> seq;
  for (const auto& e : lambda.support) seq.push_back(&e);
  if (order == LatticeOrder::Spiral) {
    std::vector<std::pair<Int, const std::pair<LatticePoint, AbElem>*>> keyed;
    for (auto* e : seq) keyed.emplace_back(spiral_index(e->first), e);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = keyed[i].second;
  } else {
    std::sort(seq.begin(), seq.end(), [](auto* x, auto* y) { return boxed_row_major_less(x->first, y->first); });
  }
  Phase acc;
  AbElem partial = seq[0]->second;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    acc += mu(partial, seq[j]->second);
    partial = G.add(partial, seq[j]->second);
  }
  return acc;
}

OplusElem lambda_h(const AbGroup& G, const AbElem& h) {
  return make_oplus(G, {{LatticePoint(0, 0), G.neg(h)}, {LatticePoint(1, 0), h}});
}

bool supported_on_D(const OplusElem& lambda) {
  return std::all_of(lambda.support.begin(), lambda.support.end(), [](const auto& e) { return e.first.r == 0; });
}

}  // namespace tbs
