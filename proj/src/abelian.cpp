#include "tbs/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tbs/errors.hpp"
#include "tbs/intmat.hpp"

namespace tbs {

namespace {

using i128 = __int128;

std::int64_t checked(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("group coordinate overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t mod_floor(i128 v, std::int64_t m) {
  i128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// AbGroup

AbGroup::AbGroup(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw InvalidArgument("negative free rank");
  for (auto n : torsion_) {
    if (n < 2) throw InvalidArgument("torsion orders must be >= 2");
  }
}

std::int64_t AbGroup::modulus(std::size_t i) const {
  if (i >= rank()) throw InvalidArgument("generator index out of range");
  return i < static_cast<std::size_t>(free_rank_) ? 0 : torsion_[i - free_rank_];
}

std::int64_t AbGroup::order() const {
  if (!is_finite()) throw Unsupported("order of an infinite group");
  i128 n = 1;
  for (auto m : torsion_) n = checked(n * m);
  return static_cast<std::int64_t>(n);
}

std::string AbGroup::str() const {
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (auto n : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

AbElem AbGroup::zero() const { return AbElem{std::vector<std::int64_t>(rank(), 0)}; }

AbElem AbGroup::generator(std::size_t i) const {
  AbElem g = zero();
  g.coords.at(i) = 1;
  return g;
}

AbElem AbGroup::make(std::vector<std::int64_t> coords) const {
  if (coords.size() != rank()) throw InvalidArgument("element has wrong number of coordinates");
  for (std::size_t i = free_rank_; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], torsion_[i - free_rank_]);
  return AbElem{std::move(coords)};
}

bool AbGroup::contains(const AbElem& g) const {
  if (g.coords.size() != rank()) return false;
  for (std::size_t i = free_rank_; i < g.coords.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= torsion_[i - free_rank_]) return false;
  }
  return true;
}

void AbGroup::check(const AbElem& g) const {
  if (!contains(g)) throw InvalidArgument("element does not belong to group " + str());
}

AbElem AbGroup::add(const AbElem& g, const AbElem& h) const {
  check(g);
  check(h);
  AbElem out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    i128 s = static_cast<i128>(g.coords[i]) + h.coords[i];
    out.coords[i] = i < static_cast<std::size_t>(free_rank_) ? checked(s)
                                                             : mod_floor(s, torsion_[i - free_rank_]);
  }
  return out;
}

AbElem AbGroup::neg(const AbElem& g) const {
  check(g);
  AbElem out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = i < static_cast<std::size_t>(free_rank_) ? checked(-static_cast<i128>(g.coords[i]))
                                                             : mod_floor(-static_cast<i128>(g.coords[i]), torsion_[i - free_rank_]);
  }
  return out;
}

AbElem AbGroup::scale(const AbElem& g, std::int64_t n) const {
  check(g);
  AbElem out = g;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    i128 s = static_cast<i128>(g.coords[i]) * n;
    out.coords[i] = i < static_cast<std::size_t>(free_rank_) ? checked(s)
                                                             : mod_floor(s, torsion_[i - free_rank_]);
  }
  return out;
}

bool AbGroup::is_zero(const AbElem& g) const {
  return std::all_of(g.coords.begin(), g.coords.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t AbGroup::element_order(const AbElem& g) const {
  check(g);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (g.coords[i] == 0) continue;
    if (i < static_cast<std::size_t>(free_rank_)) return 0;
    std::int64_t n = torsion_[i - free_rank_];
    ord = std::lcm(ord, n / std::gcd(n, g.coords[i]));
  }
  return ord;
}

std::size_t AbGroup::index_of(const AbElem& g) const {
  if (!is_finite()) throw Unsupported("indexing an infinite group");
  check(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < torsion_.size(); ++i) idx = idx * static_cast<std::size_t>(torsion_[i]) + g.coords[i];
  return idx;
}

AbElem AbGroup::element_at(std::size_t index) const {
  if (!is_finite()) throw Unsupported("indexing an infinite group");
  AbElem g = zero();
  for (std::size_t i = torsion_.size(); i-- > 0;) {
    g.coords[i] = static_cast<std::int64_t>(index % torsion_[i]);
    index /= torsion_[i];
  }
  return g;
}

std::vector<AbElem> AbGroup::elements() const {
  std::size_t n = static_cast<std::size_t>(order());
  std::vector<AbElem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

GroupInvariants invariants(const AbGroup& G) {
  GroupInvariants inv;
  inv.free_rank = G.free_rank();
  std::size_t t = G.torsion().size();
  if (t == 0) return inv;
  IntMatrix d(t, std::vector<Int>(t, Int(0)));
  for (std::size_t i = 0; i < t; ++i) d[i][i] = Int(static_cast<long>(G.torsion()[i]));
  SmithForm s = smith_normal_form(d, t, t);
  for (const auto& v : s.diagonal) {
    if (v > 1) inv.invariant_factors.push_back(v.get_si());
  }
  return inv;
}

// ---------------------------------------------------------------------------
// AbHom

AbHom::AbHom(AbGroup source, AbGroup target, IntRows matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_.rank()) throw InvalidArgument("homomorphism matrix has wrong row count");
  for (auto& row : matrix_) {
    if (row.size() != source_.rank()) throw InvalidArgument("homomorphism matrix has wrong column count");
  }
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    std::int64_t m = target_.modulus(i);
    if (m == 0) continue;
    for (auto& v : matrix_[i]) v = mod_floor(v, m);
  }
  // order compatibility: n * image(e_j) = 0 for torsion generators of order n
  for (std::size_t j = source_.free_rank(); j < source_.rank(); ++j) {
    std::int64_t n = source_.modulus(j);
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      std::int64_t m = target_.modulus(i);
      i128 v = static_cast<i128>(n) * matrix_[i][j];
      bool ok = m == 0 ? v == 0 : v % m == 0;
      if (!ok) {
        throw ValidationError("order_compatibility", "/matrix/" + std::to_string(i) + "/" + std::to_string(j),
                              "image of a generator of order " + std::to_string(n) +
                                  " does not have order dividing it");
      }
    }
  }
}

AbHom AbHom::identity(const AbGroup& G) {
  IntRows m(G.rank(), std::vector<std::int64_t>(G.rank(), 0));
  for (std::size_t i = 0; i < G.rank(); ++i) m[i][i] = 1;
  return AbHom(G, G, std::move(m));
}

AbHom AbHom::from_images(const AbGroup& source, const AbGroup& target, std::span<const AbElem> images) {
  if (images.size() != source.rank()) throw InvalidArgument("one image per source generator required");
  IntRows m(target.rank(), std::vector<std::int64_t>(source.rank(), 0));
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].coords.size() != target.rank()) throw InvalidArgument("image has wrong coordinate count");
    for (std::size_t i = 0; i < target.rank(); ++i) m[i][j] = images[j].coords[i];
  }
  return AbHom(source, target, std::move(m));
}

AbElem AbHom::image_of_generator(std::size_t j) const {
  AbElem g = target_.zero();
  for (std::size_t i = 0; i < matrix_.size(); ++i) g.coords[i] = matrix_[i][j];
  return g;
}

AbElem AbHom::apply(const AbElem& g) const {
  if (!source_.contains(g)) throw InvalidArgument("element not in the source group");
  std::vector<std::int64_t> out(target_.rank());
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    std::int64_t m = target_.modulus(i);
    i128 acc = 0;
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
      acc += static_cast<i128>(matrix_[i][j]) * g.coords[j];
      if (m) acc %= m;
    }
    out[i] = m ? mod_floor(acc, m) : checked(acc);
  }
  return AbElem{std::move(out)};
}

AbHom AbHom::compose(const AbHom& inner) const {
  if (!(inner.target_ == source_)) throw InvalidArgument("composition of incompatible homomorphisms");
  IntRows m(target_.rank(), std::vector<std::int64_t>(inner.source_.rank(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t mod = target_.modulus(i);
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      i128 acc = 0;
      for (std::size_t l = 0; l < source_.rank(); ++l) {
        acc += static_cast<i128>(matrix_[i][l]) * inner.matrix_[l][j];
        if (mod) acc %= mod;
      }
      m[i][j] = mod ? mod_floor(acc, mod) : checked(acc);
    }
  }
  return AbHom(inner.source_, target_, std::move(m));
}

std::size_t image_size(const AbHom& f) {
  if (!f.source().is_finite()) throw Unsupported("image size of a map from an infinite group");
  const AbGroup& T = f.target();
  std::vector<AbElem> gens;
  for (std::size_t j = 0; j < f.source().rank(); ++j) gens.push_back(f.image_of_generator(j));

  // closure of {0} under adding generator images
  std::vector<AbElem> frontier{T.zero()};
  std::size_t count = 1;
  if (T.is_finite()) {
    std::vector<char> seen(static_cast<std::size_t>(T.order()), 0);
    seen[T.index_of(T.zero())] = 1;
    while (!frontier.empty()) {
      AbElem x = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& g : gens) {
        AbElem y = T.add(x, g);
        auto idx = T.index_of(y);
        if (!seen[idx]) {
          seen[idx] = 1;
          ++count;
          frontier.push_back(std::move(y));
        }
      }
    }
    return count;
  }
  std::set<AbElem> seen{T.zero()};
  while (!frontier.empty()) {
    AbElem x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      AbElem y = T.add(x, g);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen.size();
}

bool is_isomorphism_by_lattice(const AbHom& f) {
  if (!(invariants(f.source()) == invariants(f.target()))) return false;
  const AbGroup& T = f.target();
  std::size_t rows = T.rank();
  if (rows == 0) return true;
  std::size_t extra = T.torsion().size();
  std::size_t cols = f.source().rank() + extra;
  IntMatrix m(rows, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < f.source().rank(); ++j) m[i][j] = Int(static_cast<long>(f.matrix()[i][j]));
  }
  for (std::size_t t = 0; t < extra; ++t) {
    std::size_t i = T.free_rank() + t;
    m[i][f.source().rank() + t] = Int(static_cast<long>(T.torsion()[t]));
  }
  SmithForm s = smith_normal_form(m, rows, cols);
  if (s.diagonal.size() < rows) return false;
  return std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Int& d) { return d == 1; });
}

bool is_isomorphism(const AbHom& f) {
  const AbGroup& S = f.source();
  const AbGroup& T = f.target();
  if (S.is_finite() != T.is_finite()) return false;
  if (S.is_finite()) return S.order() == T.order() && image_size(f) == static_cast<std::size_t>(S.order());
  return is_isomorphism_by_lattice(f);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Elements x of `b` with n*x = 0 (n = 0: free generator; free coords bounded).
std::vector<AbElem> image_candidates(const AbGroup& b, std::int64_t n, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> ranges(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    std::int64_t m = b.modulus(i);
    if (m == 0) {
      if (n != 0) {
        ranges[i] = {0};
      } else {
        for (std::int64_t v = -bound; v <= bound; ++v) ranges[i].push_back(v);
      }
    } else {
      for (std::int64_t v = 0; v < m; ++v) {
        if (n == 0 || (static_cast<i128>(n) * v) % m == 0) ranges[i].push_back(v);
      }
    }
  }
  std::vector<AbElem> out;
  std::vector<std::int64_t> cur(b.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == b.rank()) {
      out.push_back(AbElem{cur});
      return;
    }
    for (auto v : ranges[i]) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

bool for_each_isomorphism(const AbGroup& a, const AbGroup& b, std::optional<std::int64_t> bound,
                          const IsoVisitor& visit, const IsoPrune& prune) {
  if (!(invariants(a) == invariants(b))) return true;
  bool has_free = a.free_rank() > 0 || b.free_rank() > 0;
  if (has_free && !bound) throw InvalidArgument("a bound is required when a free part is present");
  if (has_free && *bound < 0) throw InvalidArgument("bound must be nonnegative");
  std::int64_t lim = has_free ? *bound : 0;

  std::vector<std::vector<AbElem>> candidates;
  for (std::size_t j = 0; j < a.rank(); ++j) candidates.push_back(image_candidates(b, a.modulus(j), lim));

  std::vector<AbElem> images;
  images.reserve(a.rank());
  bool stopped = false;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (stopped) return;
    if (j == a.rank()) {
      AbHom f = AbHom::from_images(a, b, images);
      if (is_isomorphism(f) && !visit(f)) stopped = true;
      return;
    }
    for (const auto& c : candidates[j]) {
      images.push_back(c);
      if (!prune || prune(images)) rec(j + 1);
      images.pop_back();
      if (stopped) return;
    }
  };
  rec(0);
  return !has_free;
}

IsoEnumeration enumerate_isomorphisms(const AbGroup& a, const AbGroup& b, std::optional<std::int64_t> bound) {
  IsoEnumeration out;
  out.complete = for_each_isomorphism(a, b, bound, [&](const AbHom& f) {
    out.maps.push_back(f);
    return true;
  });
  return out;
}

std::vector<AbHom> enumerate_automorphisms(const AbGroup& G) {
  if (!G.is_finite()) throw Unsupported("automorphism enumeration needs a finite group; use a bounded isomorphism search");
  return enumerate_isomorphisms(G, G, std::nullopt).maps;
}

// ---------------------------------------------------------------------------
// Characters

Character::Character(AbGroup group, std::vector<Phase> phases) : group_(std::move(group)), phases_(std::move(phases)) {
  if (phases_.size() != group_.rank()) throw InvalidArgument("character needs one phase per generator");
  for (std::size_t i = group_.free_rank(); i < group_.rank(); ++i) {
    std::int64_t n = group_.modulus(i);
    if (!phases_[i].scaled(n).is_zero()) {
      throw ValidationError("well_definedness", "/phases/" + std::to_string(i),
                            "character phase " + phases_[i].str() + " on a generator of order " +
                                std::to_string(n) + " is not well defined");
    }
  }
}

Character Character::trivial(const AbGroup& G) { return Character(G, std::vector<Phase>(G.rank())); }

Phase Character::operator()(const AbElem& g) const {
  if (g.coords.size() != phases_.size()) throw InvalidArgument("character evaluated outside its group");
  Phase acc;
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (g.coords[i] != 0) acc += phases_[i].scaled(g.coords[i]);
  }
  return acc;
}

Character Character::operator+(const Character& other) const {
  if (!(group_ == other.group_)) throw InvalidArgument("characters on different groups");
  std::vector<Phase> p(phases_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = phases_[i] + other.phases_[i];
  return Character(group_, std::move(p));
}

Character Character::power(const Int& n) const {
  std::vector<Phase> p(phases_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = phases_[i].scaled(n);
  return Character(group_, std::move(p));
}

Character Character::pullback(const AbHom& f) const {
  if (!(f.target() == group_)) throw InvalidArgument("pullback along a map into a different group");
  std::vector<Phase> p;
  for (std::size_t j = 0; j < f.source().rank(); ++j) p.push_back((*this)(f.image_of_generator(j)));
  return Character(f.source(), std::move(p));
}

bool Character::is_trivial() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const Phase& p) { return p.is_zero(); });
}

std::vector<Character> all_characters(const AbGroup& G) {
  if (!G.is_finite()) throw Unsupported("the dual of an infinite group is not enumerable");
  std::vector<Character> out;
  std::vector<Phase> cur(G.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == G.rank()) {
      out.emplace_back(G, cur);
      return;
    }
    std::int64_t n = G.modulus(i);
    for (std::int64_t k = 0; k < n; ++k) {
      cur[i] = Phase(k, n);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Group structure

std::string GroupStructure::str() const {
  if (!abelian) return "nonabelian of order " + std::to_string(order);
  if (invariant_factors.empty()) return "trivial";
  std::string s;
  for (auto d : invariant_factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

GroupStructure group_structure(const std::vector<AbHom>& elements) {
  if (elements.empty()) throw InvalidArgument("empty element list");
  std::size_t n = elements.size();
  std::map<AbHom, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(elements[i].source() == elements[0].source()) || !(elements[i].target() == elements[i].source())) {
      throw InvalidArgument("group elements must be endomorphisms of one group");
    }
    index.emplace(elements[i], i);
  }
  if (index.size() != n) throw InvalidArgument("duplicate elements in group list");

  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(elements[i].compose(elements[j]));
      if (it == index.end()) {
        throw InvalidArgument("list not closed under composition: elements " + std::to_string(i) + " and " +
                              std::to_string(j));
      }
      table[i * n + j] = it->second;
    }
  auto id_it = index.find(AbHom::identity(elements[0].source()));
  if (id_it == index.end()) throw InvalidArgument("list does not contain the identity");
  std::size_t id = id_it->second;
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n && !has_inverse; ++j) has_inverse = table[i * n + j] == id;
    if (!has_inverse) throw InvalidArgument("list not closed under inverses: element " + std::to_string(i));
  }

  GroupStructure out;
  out.order = n;
  for (std::size_t i = 0; i < n && out.abelian; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table[i * n + j] != table[j * n + i]) {
        out.abelian = false;
        break;
      }
    }
  if (!out.abelian || n == 1) return out;

  std::vector<std::int64_t> orders(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i;
    std::int64_t k = 1;
    while (x != id) {
      x = table[x * n + i];
      ++k;
    }
    orders[i] = k;
  }

  // p-primary parts from counts of elements whose order divides p^k
  std::vector<std::vector<std::int64_t>> exps;  // per prime: exponents descending
  std::vector<std::int64_t> primes = prime_factors(static_cast<std::int64_t>(n));
  for (auto p : primes) {
    std::vector<std::int64_t> at_least;  // at_least[k-1] = #cyclic factors of order >= p^k
    std::int64_t prev = 1;
    for (std::int64_t pk = p;; pk *= p) {
      std::int64_t c = std::count_if(orders.begin(), orders.end(), [&](std::int64_t o) { return pk % o == 0; });
      std::int64_t ratio = c / prev;
      std::int64_t f = 0;
      while (ratio > 1) {
        ratio /= p;
        ++f;
      }
      if (f == 0) break;
      at_least.push_back(f);
      prev = c;
    }
    std::vector<std::int64_t> e;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::int64_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (std::int64_t c = 0; c < at_least[k] - next; ++c) e.push_back(static_cast<std::int64_t>(k) + 1);
    }
    std::sort(e.rbegin(), e.rend());
    exps.push_back(std::move(e));
  }
  std::size_t count = 0;
  for (const auto& e : exps) count = std::max(count, e.size());
  std::vector<std::int64_t> factors(count, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    for (std::size_t k = 0; k < exps[pi].size(); ++k) {
      for (std::int64_t c = 0; c < exps[pi][k]; ++c) factors[count - 1 - k] *= primes[pi];
    }
  }
  out.invariant_factors = std::move(factors);
  return out;
}

}  // namespace tbs
