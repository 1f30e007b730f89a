#pragma once

// Named triplets: the (Z/q)^2 family, their direct sums, and the Z^2 families with
// the determinant form.

#include <vector>

#include "tbs/dynamics.hpp"

namespace tbs {

// mu_q((s1, t1), (s2, t2)) = s1 t2 / q on (Z/q)^2.
Cocycle mu_q(std::int64_t q);
// chi_q(s1, t1) = s1 / q.
Character chi_q(std::int64_t q);
Triplet q_triplet(std::int64_t q);
// Direct sum of the q_triplet data over qs.
Triplet product_triplet(const std::vector<std::int64_t>& qs);

// theta * (s1 t2 - t1 s2) on Z^2; its commutator form is 2 theta det.
Cocycle mu_det(const Phase& theta);
// theta * s1 t2 on Z^2; its commutator form is theta det.
Cocycle mu_upper(const Phase& theta);
Triplet z2_triplet(const Cocycle& mu, const Character& chi, std::string label = {});

}  // namespace tbs
