#pragma once

// Conjugacy of twisted Bernoulli shifts decided at the level of triplets: an
// isomorphism phi: H_a -> H_b intertwines the shifts exactly when it carries
// mu_a^* mu_a to mu_b^* mu_b and chi_a^2 to chi_b^2. The analytic statement that
// every conjugacy arises this way is not something computed here; queries are
// posed and answered on (H, mu, chi) only.

#include <optional>
#include <string>
#include <vector>

#include "tbs/dynamics.hpp"

namespace tbs {

struct ConditionFlags {
  bool cocycle = false;
  bool character = false;
};

// Requires phi to be an isomorphism H_a -> H_b.
ConditionFlags check_conditions(const Triplet& ta, const Triplet& tb, const AbHom& phi);

enum class Verdict { Yes, No, Unknown };
std::string verdict_name(Verdict v);

struct ConjugacyReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<AbHom> witness;
  // For YES: the witness's flags. Otherwise: whether some enumerated isomorphism
  // satisfied each condition on its own.
  ConditionFlags checks;
  bool complete = false;
  bool closed_form = false;
};

// Both groups Z^2, both cocycles bicharacters, equal characters.
bool closed_form_applies(const Triplet& ta, const Triplet& tb);
ConjugacyReport decide_conjugacy(const Triplet& ta, const Triplet& tb, std::optional<std::int64_t> bound);
// Exhaustive (or bounded) search, never the closed form.
ConjugacyReport decide_conjugacy_by_search(const Triplet& ta, const Triplet& tb, std::optional<std::int64_t> bound);

// pi(u(lambda)) = [c~(lambda) + mu^_a(lambda) - mu^_b(phi o lambda)] v(phi o lambda)
// with c~(lambda) = sum_k gcd(k) c_phi(lambda(k)) and c_phi = chi_a - chi_b o phi.
class PiPhi {
 public:
  const Triplet& source() const noexcept { return *ta_; }
  const Triplet& target() const noexcept { return *tb_; }
  const AbHom& phi() const noexcept { return phi_; }
  const Character& c_phi() const noexcept { return c_phi_; }
  Phase c_tilde(const OplusElem& lambda) const;
  AlgElem apply(const AlgElem& x) const;

 private:
  friend PiPhi build_pi(const Triplet&, const Triplet&, const AbHom&, bool);
  PiPhi(const Triplet& ta, const Triplet& tb, AbHom phi, Character c, bool drop_gcd)
      : ta_(&ta), tb_(&tb), phi_(std::move(phi)), c_phi_(std::move(c)), drop_gcd_(drop_gcd) {}

  const Triplet* ta_;
  const Triplet* tb_;
  AbHom phi_;
  Character c_phi_;
  bool drop_gcd_;
};

// drop_gcd_exponent replaces gcd(k) by 1 in c~ (a deliberately wrong variant).
// The triplets must outlive the result.
PiPhi build_pi(const Triplet& ta, const Triplet& tb, const AbHom& phi, bool drop_gcd_exponent = false);

struct PiReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

// Multiplicativity and star on the pairs, trace on every sample, and
// pi o beta_a(g) = beta_b(g) o pi for g in the fixed generator list plus `affine`.
PiReport verify_pi(const PiPhi& pi, const std::vector<std::pair<AlgElem, AlgElem>>& pairs,
                   const std::vector<AffineSL2>& affine);
std::vector<AffineSL2> standard_affine_elements();  // (e1,I), (e2,I), (0,delta), xi, (0,eta)

struct CentralizerReport {
  Verdict verdict = Verdict::Unknown;  // Yes when the list is complete
  bool complete = false;
  std::vector<AbHom> elements;
  std::optional<GroupStructure> structure;
};

CentralizerReport centralizer(const Triplet& t, std::optional<std::int64_t> bound);

}  // namespace tbs
