#pragma once

// Normalized scalar 2-cocycles on an abelian group H, valued in Q/Z.

#include <optional>
#include <vector>

#include "tbs/abelian.hpp"

namespace tbs {

using PhaseMatrix = std::vector<std::vector<Phase>>;

class Cocycle {
 public:
  enum class Kind { Table, Bichar };

  Cocycle() = default;
  static Cocycle trivial(const AbGroup& G);
  // mu(g, h) = sum_ij g_i B_ij h_j. Rejects entries that are not well defined on
  // reduced torsion coordinates.
  static Cocycle bichar(const AbGroup& G, PhaseMatrix B);
  // values[index_of(g) * |G| + index_of(h)] = mu(g, h). Checks normalization and
  // the cocycle identity exhaustively.
  static Cocycle table(const AbGroup& G, std::vector<Phase> values);

  Kind kind() const noexcept { return kind_; }
  const AbGroup& group() const noexcept { return group_; }
  const PhaseMatrix& matrix() const;  // Bichar only
  const std::vector<Phase>& values() const;  // Table only

  Phase operator()(const AbElem& g, const AbElem& h) const;
  Cocycle to_table() const;  // finite groups

  friend bool operator==(const Cocycle& a, const Cocycle& b) {
    return a.kind_ == b.kind_ && a.group_ == b.group_ && a.matrix_ == b.matrix_ && a.values_ == b.values_;
  }

 private:
  Kind kind_ = Kind::Bichar;
  AbGroup group_;
  PhaseMatrix matrix_;
  std::vector<Phase> values_;
  // Bichar evaluation over a common denominator.
  std::int64_t den_ = 1;
  std::vector<std::vector<std::int64_t>> nums_;
};

inline Phase cocycle_eval(const Cocycle& mu, const AbElem& g, const AbElem& h) { return mu(g, h); }

// A bilinear form H x H -> Q/Z given by its values on generator pairs.
class Bicharacter {
 public:
  Bicharacter(AbGroup group, PhaseMatrix matrix);

  const AbGroup& group() const noexcept { return group_; }
  const PhaseMatrix& matrix() const noexcept { return matrix_; }
  bool antisymmetric() const;
  Phase operator()(const AbElem& g, const AbElem& h) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  AbGroup group_;
  PhaseMatrix matrix_;
};

// (g, h) -> mu(g, h) - mu(h, g).
Bicharacter star_bicharacter(const Cocycle& mu);

bool cohomologous(const Cocycle& mu1, const Cocycle& mu2);

// A function b with mu1 - mu2 = b(g) + b(h) - b(g + h), found by solving the
// linear system over Q/Z directly; indexed by index_of. Finite groups of order
// at most 64.
std::optional<std::vector<Phase>> coboundary_witness(const Cocycle& mu1, const Cocycle& mu2);

struct Nondegeneracy {
  bool nondegenerate = true;
  std::optional<AbElem> witness;  // a nonzero g commuting with every u_h
};

// Finite groups: exhaustive over g. Otherwise via the radical of the integer
// form L * (star matrix), computed with Smith normal form.
Nondegeneracy is_nondegenerate(const Cocycle& mu);
Nondegeneracy nondegenerate_by_smith(const Cocycle& mu);

}  // namespace tbs
