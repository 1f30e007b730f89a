#include "tbs/catalog.hpp"

namespace tbs {

Cocycle mu_q(std::int64_t q) {
  AbGroup G(0, {q, q});
  return Cocycle::bichar(G, {{Phase(), Phase(1, q)}, {Phase(), Phase()}});
}

Character chi_q(std::int64_t q) { return Character(AbGroup(0, {q, q}), {Phase(1, q), Phase()}); }

Triplet q_triplet(std::int64_t q) {
  return Triplet(AbGroup(0, {q, q}), mu_q(q), chi_q(q), "q=" + std::to_string(q));
}

Triplet product_triplet(const std::vector<std::int64_t>& qs) {
  std::vector<std::int64_t> torsion;
  for (auto q : qs) torsion.insert(torsion.end(), {q, q});
  AbGroup G(0, torsion);
  std::size_t r = torsion.size();
  PhaseMatrix B(r, std::vector<Phase>(r));
  std::vector<Phase> chi(r);
  std::string label = "Q={";
  for (std::size_t i = 0; i < qs.size(); ++i) {
    B[2 * i][2 * i + 1] = Phase(1, qs[i]);
    chi[2 * i] = Phase(1, qs[i]);
    label += (i ? "," : "") + std::to_string(qs[i]);
  }
  return Triplet(G, Cocycle::bichar(G, std::move(B)), Character(G, std::move(chi)), label + "}");
}

Cocycle mu_det(const Phase& theta) { return Cocycle::bichar(AbGroup(2, {}), {{Phase(), theta}, {-theta, Phase()}}); }

Cocycle mu_upper(const Phase& theta) { return Cocycle::bichar(AbGroup(2, {}), {{Phase(), theta}, {Phase(), Phase()}}); }

Triplet z2_triplet(const Cocycle& mu, const Character& chi, std::string label) {
  return Triplet(AbGroup(2, {}), mu, chi, std::move(label));
}

}  // namespace tbs
