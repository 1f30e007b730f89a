#include "tbs/classify.hpp"

#include <numeric>

namespace tbs {

namespace {

struct ConditionData {
  Bicharacter star_a, star_b;
  const Triplet* ta;
  const Triplet* tb;

  ConditionData(const Triplet& a, const Triplet& b)
      : star_a(star_bicharacter(a.mu)), star_b(star_bicharacter(b.mu)), ta(&a), tb(&b) {}

  // Conditions restricted to the first images.size() generators; only pairs
  // involving the newest generator are checked.
  bool cocycle_prefix(std::span<const AbElem> images) const {
    std::size_t m = images.size() - 1;
    for (std::size_t i = 0; i <= m; ++i) {
      if (star_a.matrix()[i][m] != star_b(images[i], images[m])) return false;
      if (star_a.matrix()[m][i] != star_b(images[m], images[i])) return false;
    }
    return true;
  }
  bool character_prefix(std::span<const AbElem> images) const {
    std::size_t m = images.size() - 1;
    return ta->chi.phases()[m].scaled(2) == tb->chi(images[m]).scaled(2);
  }
};

std::vector<AbElem> images_of(const AbHom& f) {
  std::vector<AbElem> out;
  for (std::size_t j = 0; j < f.source().rank(); ++j) out.push_back(f.image_of_generator(j));
  return out;
}

AbHom matrix_hom(const AbGroup& G, const Matrix2& A) {
  auto get = [](const Int& v) {
    if (!v.fits_slong_p()) throw Unsupported("witness entry too large");
    return static_cast<std::int64_t>(v.get_si());
  };
  return AbHom(G, G, {{get(A.x), get(A.y)}, {get(A.z), get(A.w)}});
}

// A determinant -1 matrix A with a A = a for the integer row vector a.
Matrix2 reflection_fixing(const Int& a1, const Int& a2) {
  if (a1 == 0 && a2 == 0) return make_matrix(1, 0, 0, -1);
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
  Matrix2 S{x, Int(-a2 / g), y, Int(a1 / g)};  // a S = (g, 0)
  return S * make_matrix(1, 0, 0, -1) * S.inverse();
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    default: return "UNKNOWN";
  }
}

ConditionFlags check_conditions(const Triplet& ta, const Triplet& tb, const AbHom& phi) {
  if (!(phi.source() == ta.group) || !(phi.target() == tb.group)) {
    throw InvalidArgument("phi must map the first triplet's group to the second's");
  }
  if (!is_isomorphism(phi)) throw InvalidArgument("phi is not an isomorphism");
  ConditionData d(ta, tb);
  std::vector<AbElem> im = images_of(phi);
  ConditionFlags f{true, true};
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = 0; j < im.size(); ++j)
      if (d.star_a.matrix()[i][j] != d.star_b(im[i], im[j])) f.cocycle = false;
    if (ta.chi.phases()[i].scaled(2) != tb.chi(im[i]).scaled(2)) f.character = false;
  }
  return f;
}

bool closed_form_applies(const Triplet& ta, const Triplet& tb) {
  AbGroup z2(2, {});
  return ta.group == z2 && tb.group == z2 && ta.mu.kind() == Cocycle::Kind::Bichar &&
         tb.mu.kind() == Cocycle::Kind::Bichar && ta.chi.phases() == tb.chi.phases();
}

ConjugacyReport decide_conjugacy_by_search(const Triplet& ta, const Triplet& tb, std::optional<std::int64_t> bound) {
  ConjugacyReport rep;
  if (!(invariants(ta.group) == invariants(tb.group))) {
    rep.verdict = Verdict::No;
    rep.complete = true;
    return rep;
  }
  bool has_free = ta.group.free_rank() > 0;
  if (has_free && !bound) return rep;

  ConditionData d(ta, tb);
  auto first = [&](const IsoPrune& prune, std::optional<AbHom>& found) {
    return for_each_isomorphism(
        ta.group, tb.group, bound,
        [&](const AbHom& f) {
          found = f;
          return false;
        },
        prune);
  };
  std::optional<AbHom> w;
  bool complete = first([&](std::span<const AbElem> im) { return d.cocycle_prefix(im) && d.character_prefix(im); }, w);
  if (w) {
    rep.verdict = Verdict::Yes;
    rep.witness = w;
    rep.checks = {true, true};
    rep.complete = true;
    return rep;
  }
  std::optional<AbHom> wc, wx;
  first([&](std::span<const AbElem> im) { return d.cocycle_prefix(im); }, wc);
  first([&](std::span<const AbElem> im) { return d.character_prefix(im); }, wx);
  rep.checks = {wc.has_value(), wx.has_value()};
  rep.complete = complete;
  rep.verdict = complete ? Verdict::No : Verdict::Unknown;
  return rep;
}

ConjugacyReport decide_conjugacy(const Triplet& ta, const Triplet& tb, std::optional<std::int64_t> bound) {
  if (!closed_form_applies(ta, tb)) return decide_conjugacy_by_search(ta, tb, bound);
  // Any A in GL(2, Z) multiplies the antisymmetric form by det A = +-1.
  ConjugacyReport rep;
  rep.complete = true;
  rep.closed_form = true;
  Phase sa = star_bicharacter(ta.mu).matrix()[0][1];
  Phase sb = star_bicharacter(tb.mu).matrix()[0][1];
  std::optional<Matrix2> A;
  if (sa == sb) {
    A = Matrix2{};
  } else if (sa == -sb) {
    const auto& p = ta.chi.phases();
    Phase p1 = p[0].scaled(2), p2 = p[1].scaled(2);
    std::int64_t D = std::lcm(p1.den(), p2.den());
    A = reflection_fixing(Int(static_cast<long>(p1.num() * (D / p1.den()))),
                          Int(static_cast<long>(p2.num() * (D / p2.den()))));
  }
  if (!A) {
    rep.verdict = Verdict::No;
    rep.checks = {false, true};
    return rep;
  }
  AbHom phi = matrix_hom(ta.group, *A);
  ConditionFlags f = check_conditions(ta, tb, phi);
  if (!f.cocycle || !f.character) throw Error("closed-form witness failed its own conditions");
  rep.verdict = Verdict::Yes;
  rep.witness = phi;
  rep.checks = f;
  return rep;
}

// ---------------------------------------------------------------------------

PiPhi build_pi(const Triplet& ta, const Triplet& tb, const AbHom& phi, bool drop_gcd_exponent) {
  ConditionFlags f = check_conditions(ta, tb, phi);
  if (!f.cocycle || !f.character) throw InvalidArgument("phi does not satisfy the conjugacy conditions");
  Character c = ta.chi + tb.chi.pullback(phi).power(Int(-1));
  return PiPhi(ta, tb, phi, std::move(c), drop_gcd_exponent);
}

Phase PiPhi::c_tilde(const OplusElem& lambda) const {
  Phase acc;
  for (const auto& [k, v] : lambda.support) {
    Phase p = c_phi_(v);
    acc += drop_gcd_ ? p : p.scaled(gcd2(k));
  }
  return acc;
}

AlgElem PiPhi::apply(const AlgElem& x) const {
  if (!same_base(x.base(), ta_->base())) throw InvalidArgument("element is not over the source algebra");
  AlgElem out(tb_->base());
  for (const auto& [lambda, c] : x.terms()) {
    OplusElem image = apply_pointwise(phi_, lambda);
    Phase ph = c_tilde(lambda) + mu_hat(ta_->mu, lambda) - mu_hat(tb_->mu, image);
    out.add_term(std::move(image), c.times_root(ph));
  }
  return out;
}

std::vector<AffineSL2> standard_affine_elements() {
  const auto& c = constants();
  return {AffineSL2::translation(c.e1), AffineSL2::translation(c.e2), AffineSL2::linear(c.delta), c.xi,
          AffineSL2::linear(c.eta)};
}

PiReport verify_pi(const PiPhi& pi, const std::vector<std::pair<AlgElem, AlgElem>>& pairs,
                   const std::vector<AffineSL2>& affine) {
  PiReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.failures.size() < 10) rep.failures.push_back(std::move(msg));
  };
  std::vector<AffineSL2> gs = standard_affine_elements();
  gs.insert(gs.end(), affine.begin(), affine.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    std::string at = " at pair " + std::to_string(i);
    ++rep.checked;
    if (!(pi.apply(x * y) == pi.apply(x) * pi.apply(y))) fail("multiplicativity fails" + at);
    if (!(pi.apply(x.star()) == pi.apply(x).star())) fail("star fails" + at);
    if (!(pi.apply(x).trace() == x.trace())) fail("trace fails" + at);
    for (const AlgElem* z : {&x, &y}) {
      for (std::size_t j = 0; j < gs.size(); ++j) {
        AlgElem lhs = pi.apply(beta_apply(pi.source(), gs[j], *z));
        AlgElem rhs = beta_apply(pi.target(), gs[j], pi.apply(*z));
        if (!(lhs == rhs)) {
          fail("equivariance fails" + at + " for affine element " + std::to_string(j) + " (t=" + gs[j].t().str() +
               ", m=" + gs[j].m().str() + ")");
        }
      }
    }
  }
  return rep;
}

CentralizerReport centralizer(const Triplet& t, std::optional<std::int64_t> bound) {
  CentralizerReport rep;
  if (!t.group.is_finite() && !bound) return rep;
  ConditionData d(t, t);
  bool complete = for_each_isomorphism(
      t.group, t.group, bound,
      [&](const AbHom& f) {
        rep.elements.push_back(f);
        return true;
      },
      [&](std::span<const AbElem> im) { return d.cocycle_prefix(im) && d.character_prefix(im); });
  rep.complete = complete;
  if (complete) {
    rep.verdict = Verdict::Yes;
    rep.structure = group_structure(rep.elements);
  }
  return rep;
}

}  // namespace tbs
