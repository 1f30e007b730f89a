#pragma once

// Finitely generated abelian groups Z^d + Z/n_1 + ... + Z/n_s, presented by the
// generator list as given (free generators first, then torsion generators); no
// invariant-factor normalization is forced on the presentation.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbs/scalars.hpp"

namespace tbs {

struct AbElem {
  std::vector<std::int64_t> coords;

  friend bool operator==(const AbElem&, const AbElem&) = default;
  friend auto operator<=>(const AbElem&, const AbElem&) = default;
};

class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(int free_rank, std::vector<std::int64_t> torsion);

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  // 0 for a free generator, n_i for a torsion generator.
  std::int64_t modulus(std::size_t i) const;
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  std::int64_t order() const;  // finite groups only
  std::string str() const;     // e.g. "Z^2 + Z/3 + Z/3"

  AbElem zero() const;
  AbElem generator(std::size_t i) const;
  // Reduces torsion coordinates into [0, n_i).
  AbElem make(std::vector<std::int64_t> coords) const;
  bool contains(const AbElem& g) const;  // right length and reduced
  AbElem add(const AbElem& g, const AbElem& h) const;
  AbElem neg(const AbElem& g) const;
  AbElem sub(const AbElem& g, const AbElem& h) const { return add(g, neg(h)); }
  AbElem scale(const AbElem& g, std::int64_t n) const;
  bool is_zero(const AbElem& g) const;
  // Order of g; 0 for elements of infinite order.
  std::int64_t element_order(const AbElem& g) const;

  // Mixed-radix enumeration of a finite group, first coordinate most significant.
  std::size_t index_of(const AbElem& g) const;
  AbElem element_at(std::size_t index) const;
  std::vector<AbElem> elements() const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;

 private:
  void check(const AbElem& g) const;

  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

inline AbElem elem_add(const AbGroup& G, const AbElem& g, const AbElem& h) { return G.add(g, h); }
inline AbElem elem_neg(const AbGroup& G, const AbElem& g) { return G.neg(g); }

// Invariants of the isomorphism class: free rank plus torsion invariant factors
// (each dividing the next, all >= 2).
struct GroupInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> invariant_factors;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};
GroupInvariants invariants(const AbGroup& G);

using IntRows = std::vector<std::vector<std::int64_t>>;

// A homomorphism between presented groups. Column j of the matrix is the image of
// source generator j in target coordinates; torsion rows are kept reduced.
class AbHom {
 public:
  AbHom(AbGroup source, AbGroup target, IntRows matrix);
  static AbHom identity(const AbGroup& G);
  // The homomorphism sending generator j to images[j].
  static AbHom from_images(const AbGroup& source, const AbGroup& target,
                           std::span<const AbElem> images);

  const AbGroup& source() const noexcept { return source_; }
  const AbGroup& target() const noexcept { return target_; }
  const IntRows& matrix() const noexcept { return matrix_; }
  AbElem image_of_generator(std::size_t j) const;

  AbElem apply(const AbElem& g) const;
  // (this o inner): first inner, then this.
  AbHom compose(const AbHom& inner) const;

  friend bool operator==(const AbHom& a, const AbHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }
  friend bool operator<(const AbHom& a, const AbHom& b) { return a.matrix_ < b.matrix_; }

 private:
  AbGroup source_;
  AbGroup target_;
  IntRows matrix_;
};

inline AbElem hom_apply(const AbHom& f, const AbElem& g) { return f.apply(g); }

// Bijectivity. Finite groups: counts the image. Otherwise: equal invariants and
// surjectivity via Smith normal form (surjective endomorphisms of finitely
// generated abelian groups are bijective).
bool is_isomorphism(const AbHom& f);
bool is_isomorphism_by_lattice(const AbHom& f);
std::size_t image_size(const AbHom& f);  // finite source only

struct IsoEnumeration {
  std::vector<AbHom> maps;
  bool complete = true;
};

// Visitor returns false to stop. `prune`, when set, is consulted after each
// generator image is fixed (with the images assigned so far) and may cut the
// branch. Candidates are visited in lexicographic order of generator images.
using IsoVisitor = std::function<bool(const AbHom&)>;
using IsoPrune = std::function<bool(std::span<const AbElem>)>;

// Returns true when the enumeration was exhaustive over all isomorphisms.
bool for_each_isomorphism(const AbGroup& a, const AbGroup& b, std::optional<std::int64_t> bound,
                          const IsoVisitor& visit, const IsoPrune& prune = {});

IsoEnumeration enumerate_isomorphisms(const AbGroup& a, const AbGroup& b,
                                      std::optional<std::int64_t> bound);
std::vector<AbHom> enumerate_automorphisms(const AbGroup& G);

// A character of G given by its phase on each generator.
class Character {
 public:
  Character() = default;
  Character(AbGroup group, std::vector<Phase> phases);  // validates n_i * phase_i = 0
  static Character trivial(const AbGroup& G);

  const AbGroup& group() const noexcept { return group_; }
  const std::vector<Phase>& phases() const noexcept { return phases_; }
  Phase operator()(const AbElem& g) const;

  Character operator+(const Character& other) const;  // pointwise product
  Character power(const Int& n) const;                // g -> n * chi(g)
  Character pullback(const AbHom& f) const;           // chi o f, f: X -> group
  bool is_trivial() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  AbGroup group_;
  std::vector<Phase> phases_;
};

inline Phase character_eval(const Character& chi, const AbElem& g) { return chi(g); }

// Every character of a finite group, in lexicographic order of generator phases.
std::vector<Character> all_characters(const AbGroup& G);

struct GroupStructure {
  std::size_t order = 0;
  bool abelian = true;
  std::vector<std::int64_t> invariant_factors;  // abelian only; empty for trivial
  std::string str() const;                      // "Z/15", "Z/3 x Z/3", "trivial", ...
};

// Structure of a finite group of automorphisms/isomorphisms given as a list.
// Throws InvalidArgument naming a witness pair when the list is not closed.
GroupStructure group_structure(const std::vector<AbHom>& elements);

}  // namespace tbs
