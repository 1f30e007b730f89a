#include "tbs/cocycle.hpp"

#include <numeric>

#include "tbs/errors.hpp"
#include "tbs/intmat.hpp"

namespace tbs {

namespace {

using i128 = __int128;

std::string cell_path(const char* root, std::size_t i, std::size_t j) {
  return std::string(root) + "/" + std::to_string(i) + "/" + std::to_string(j);
}

std::int64_t lcm_or_throw(std::int64_t a, std::int64_t b) {
  i128 l = static_cast<i128>(a / std::gcd(a, b)) * b;
  if (l > INT64_MAX) throw Unsupported("phase denominators too large");
  return static_cast<std::int64_t>(l);
}

}  // namespace

Cocycle Cocycle::trivial(const AbGroup& G) {
  return bichar(G, PhaseMatrix(G.rank(), std::vector<Phase>(G.rank())));
}

Cocycle Cocycle::bichar(const AbGroup& G, PhaseMatrix B) {
  if (B.size() != G.rank()) throw InvalidArgument("bicharacter matrix has wrong row count");
  for (const auto& row : B)
    if (row.size() != G.rank()) throw InvalidArgument("bicharacter matrix has wrong column count");
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      std::int64_t ni = G.modulus(i), nj = G.modulus(j);
      bool ok = (ni == 0 || B[i][j].scaled(ni).is_zero()) && (nj == 0 || B[i][j].scaled(nj).is_zero());
      if (!ok) {
        throw ValidationError("well_definedness", cell_path("/matrix", i, j),
                              "entry " + B[i][j].str() + " is not well defined on the torsion generators");
      }
    }
  Cocycle mu;
  mu.kind_ = Kind::Bichar;
  mu.group_ = G;
  mu.matrix_ = std::move(B);
  for (const auto& row : mu.matrix_)
    for (const auto& p : row) mu.den_ = lcm_or_throw(mu.den_, p.den());
  mu.nums_.assign(G.rank(), std::vector<std::int64_t>(G.rank(), 0));
  for (std::size_t i = 0; i < G.rank(); ++i)
    for (std::size_t j = 0; j < G.rank(); ++j) mu.nums_[i][j] = mu.matrix_[i][j].num() * (mu.den_ / mu.matrix_[i][j].den());
  return mu;
}

Cocycle Cocycle::table(const AbGroup& G, std::vector<Phase> values) {
  if (!G.is_finite()) throw Unsupported("table cocycles need a finite group");
  std::size_t n = static_cast<std::size_t>(G.order());
  if (values.size() != n * n) throw InvalidArgument("cocycle table must have |G|^2 entries");
  auto at = [&](std::size_t a, std::size_t b) -> const Phase& { return values[a * n + b]; };
  std::size_t zero = G.index_of(G.zero());
  for (std::size_t a = 0; a < n; ++a) {
    if (!at(a, zero).is_zero() || !at(zero, a).is_zero()) {
      throw ValidationError("normalization", "/entries",
                            "mu(g, 0) or mu(0, g) is nonzero at g = element " + std::to_string(a));
    }
  }
  std::vector<AbElem> elems = G.elements();
  std::vector<std::size_t> sum(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sum[a * n + b] = G.index_of(G.add(elems[a], elems[b]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (at(a, b) + at(sum[a * n + b], c) != at(b, c) + at(a, sum[b * n + c])) {
          throw ValidationError("cocycle_identity", "/entries",
                                "cocycle identity fails at elements (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ", " + std::to_string(c) + ")");
        }
      }
  Cocycle mu;
  mu.kind_ = Kind::Table;
  mu.group_ = G;
  mu.values_ = std::move(values);
  return mu;
}

const PhaseMatrix& Cocycle::matrix() const {
  if (kind_ != Kind::Bichar) throw InvalidArgument("table cocycle has no bicharacter matrix");
  return matrix_;
}

const std::vector<Phase>& Cocycle::values() const {
  if (kind_ != Kind::Table) throw InvalidArgument("bicharacter cocycle has no stored table");
  return values_;
}

Phase Cocycle::operator()(const AbElem& g, const AbElem& h) const {
  if (!group_.contains(g) || !group_.contains(h)) throw InvalidArgument("cocycle evaluated outside its group");
  if (kind_ == Kind::Table) {
    std::size_t n = static_cast<std::size_t>(group_.order());
    return values_[group_.index_of(g) * n + group_.index_of(h)];
  }
  i128 acc = 0;
  std::size_t r = g.coords.size();
  for (std::size_t i = 0; i < r; ++i) {
    i128 gi = g.coords[i] % den_;
    if (gi == 0) continue;
    i128 row = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (nums_[i][j] == 0 || h.coords[j] == 0) continue;
      row = (row + static_cast<i128>(nums_[i][j]) * (h.coords[j] % den_)) % den_;
    }
    acc = (acc + gi * row) % den_;
  }
  if (acc < 0) acc += den_;
  return Phase(static_cast<std::int64_t>(acc), den_);
}

Cocycle Cocycle::to_table() const {
  if (kind_ == Kind::Table) return *this;
  std::vector<AbElem> elems = group_.elements();
  std::vector<Phase> v;
  v.reserve(elems.size() * elems.size());
  for (const auto& g : elems)
    for (const auto& h : elems) v.push_back((*this)(g, h));
  return table(group_, std::move(v));
}

// ---------------------------------------------------------------------------

Bicharacter::Bicharacter(AbGroup group, PhaseMatrix matrix) : group_(std::move(group)), matrix_(std::move(matrix)) {
  if (matrix_.size() != group_.rank()) throw InvalidArgument("bicharacter matrix has wrong size");
  for (const auto& row : matrix_)
    if (row.size() != group_.rank()) throw InvalidArgument("bicharacter matrix has wrong size");
}

bool Bicharacter::antisymmetric() const {
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (matrix_[i][j] != -matrix_[j][i]) return false;
  return true;
}

Phase Bicharacter::operator()(const AbElem& g, const AbElem& h) const {
  if (!group_.contains(g) || !group_.contains(h)) throw InvalidArgument("bicharacter evaluated outside its group");
  Phase acc;
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (g.coords[i] == 0) continue;
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      if (h.coords[j] == 0) continue;
      acc += matrix_[i][j].scaled(static_cast<std::int64_t>(static_cast<i128>(g.coords[i]) * h.coords[j] %
                                                            (matrix_[i][j].den())));
    }
  }
  return acc;
}

Bicharacter star_bicharacter(const Cocycle& mu) {
  const AbGroup& G = mu.group();
  std::size_t r = G.rank();
  PhaseMatrix m(r, std::vector<Phase>(r));
  if (mu.kind() == Cocycle::Kind::Bichar) {
    const auto& B = mu.matrix();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m[i][j] = B[i][j] - B[j][i];
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        AbElem ei = G.generator(i), ej = G.generator(j);
        m[i][j] = mu(ei, ej) - mu(ej, ei);
      }
  }
  return Bicharacter(G, std::move(m));
}

bool cohomologous(const Cocycle& mu1, const Cocycle& mu2) {
  if (!(mu1.group() == mu2.group())) throw InvalidArgument("cocycles on different groups");
  return star_bicharacter(mu1) == star_bicharacter(mu2);
}

// ---------------------------------------------------------------------------
// Coboundary oracle

namespace {

struct Row {
  std::vector<Int> a;
  Phase rhs;
};

bool row_is_zero(const Row& r) {
  for (const auto& v : r.a)
    if (v != 0) return false;
  return true;
}

// Row echelon form over Z acting on unknowns in Q/Z, kept with unimodular
// operations only so the solution set never changes.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : pivots_(n) {}

  // False when the row exposes an inconsistency.
  bool insert(Row row) {
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      if (row.a[j] == 0) continue;
      if (!pivots_[j]) {
        if (row.a[j] < 0) negate(row);
        pivots_[j] = std::move(row);
        return true;
      }
      Row& p = *pivots_[j];
      Int g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.a[j].get_mpz_t(), row.a[j].get_mpz_t());
      Int pa = p.a[j] / g, ra = row.a[j] / g;
      Row top{std::vector<Int>(p.a.size()), p.rhs.scaled(u) + row.rhs.scaled(v)};
      Row rest{std::vector<Int>(p.a.size()), row.rhs.scaled(pa) - p.rhs.scaled(ra)};
      for (std::size_t c = 0; c < p.a.size(); ++c) {
        top.a[c] = u * p.a[c] + v * row.a[c];
        rest.a[c] = pa * row.a[c] - ra * p.a[c];
      }
      p = std::move(top);
      row = std::move(rest);
    }
    return row_is_zero(row) ? row.rhs.is_zero() : true;
  }

  // One solution; free unknowns are set to 0.
  std::vector<Phase> solve() const {
    std::vector<Phase> y(pivots_.size());
    for (std::size_t j = pivots_.size(); j-- > 0;) {
      if (!pivots_[j]) continue;
      const Row& p = *pivots_[j];
      Phase rhs = p.rhs;
      for (std::size_t c = j + 1; c < y.size(); ++c)
        if (p.a[c] != 0) rhs -= y[c].scaled(p.a[c]);
      if (!p.a[j].fits_slong_p()) throw Unsupported("coefficient growth in the coboundary solver");
      y[j] = rhs.divided(p.a[j].get_si());
    }
    return y;
  }

 private:
  static void negate(Row& r) {
    for (auto& v : r.a) v = -v;
    r.rhs = -r.rhs;
  }
  std::vector<std::optional<Row>> pivots_;
};

}  // namespace

std::optional<std::vector<Phase>> coboundary_witness(const Cocycle& mu1, const Cocycle& mu2) {
  const AbGroup& G = mu1.group();
  if (!(G == mu2.group())) throw InvalidArgument("cocycles on different groups");
  if (!G.is_finite() || G.order() > 64) throw Unsupported("the coboundary oracle handles finite groups of order <= 64");
  std::size_t n = static_cast<std::size_t>(G.order());
  std::size_t r = G.rank();
  std::vector<AbElem> elems = G.elements();
  auto nu = [&](std::size_t a, std::size_t b) { return mu1(elems[a], elems[b]) - mu2(elems[a], elems[b]); };

  // b(g) = konst[g] + sum_i coef[g][i] * y_i with y_i = b(e_i), along a spanning tree.
  std::vector<Phase> konst(n);
  std::vector<std::vector<Int>> coef(n);
  std::vector<char> seen(n, 0);
  std::size_t zero = G.index_of(G.zero());
  coef[zero].assign(r, Int(0));
  seen[zero] = 1;
  std::vector<std::size_t> queue{zero};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t g = queue[head];
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t e = G.index_of(G.generator(i));
      std::size_t h = G.index_of(G.add(elems[g], elems[e]));
      if (seen[h]) continue;
      seen[h] = 1;
      konst[h] = konst[g] - nu(g, e);
      coef[h] = coef[g];
      coef[h][i] += 1;
      queue.push_back(h);
    }
  }

  Echelon ech(r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t s = G.index_of(G.add(elems[a], elems[b]));
      Row row{std::vector<Int>(r), nu(a, b) - (konst[a] + konst[b] - konst[s])};
      for (std::size_t i = 0; i < r; ++i) row.a[i] = coef[a][i] + coef[b][i] - coef[s][i];
      if (!ech.insert(std::move(row))) return std::nullopt;
    }
  std::vector<Phase> y = ech.solve();
  std::vector<Phase> b(n);
  for (std::size_t g = 0; g < n; ++g) {
    b[g] = konst[g];
    for (std::size_t i = 0; i < r; ++i)
      if (coef[g][i] != 0) b[g] += y[i].scaled(coef[g][i]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t s = G.index_of(G.add(elems[a], elems[c]));
      if (b[a] + b[c] - b[s] != nu(a, c)) throw Error("coboundary solver produced an invalid witness");
    }
  return b;
}

// ---------------------------------------------------------------------------
// Nondegeneracy

Nondegeneracy nondegenerate_by_smith(const Cocycle& mu) {
  Bicharacter star = star_bicharacter(mu);
  const AbGroup& G = mu.group();
  std::size_t r = G.rank();
  Nondegeneracy out;
  if (r == 0) return out;
  std::int64_t L = 1;
  for (const auto& row : star.matrix())
    for (const auto& p : row) L = lcm_or_throw(L, p.den());
  // g pairs trivially with everything iff C^T g = 0 mod L, C = L * star.
  IntMatrix ct(r, std::vector<Int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Phase& p = star.matrix()[j][i];
      ct[i][j] = Int(static_cast<long>(p.num())) * (L / p.den());
    }
  SmithForm s = smith_normal_form(ct, r, r);
  Int Lz(static_cast<long>(L));
  for (std::size_t i = 0; i < r; ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), Lz.get_mpz_t(), s.diagonal[i].get_mpz_t());
    Int m = Lz / g;
    std::vector<std::int64_t> coords(r);
    for (std::size_t k = 0; k < r; ++k) {
      Int v = m * s.right[k][i];
      std::int64_t mod = G.modulus(k);
      if (mod) v = v % Int(static_cast<long>(mod));
      if (!v.fits_slong_p()) throw Unsupported("radical vector does not fit machine integers");
      coords[k] = v.get_si();
    }
    AbElem w = G.make(std::move(coords));
    if (!G.is_zero(w)) {
      out.nondegenerate = false;
      out.witness = w;
      return out;
    }
  }
  return out;
}

Nondegeneracy is_nondegenerate(const Cocycle& mu) {
  const AbGroup& G = mu.group();
  if (!G.is_finite()) return nondegenerate_by_smith(mu);
  Bicharacter star = star_bicharacter(mu);
  std::size_t n = static_cast<std::size_t>(G.order());
  std::vector<AbElem> gens;
  for (std::size_t j = 0; j < G.rank(); ++j) gens.push_back(G.generator(j));
  Nondegeneracy out;
  for (std::size_t idx = 0; idx < n; ++idx) {
    AbElem g = G.element_at(idx);
    if (G.is_zero(g)) continue;
    bool pairs = false;
    for (const auto& h : gens) {
      if (!star(g, h).is_zero()) {
        pairs = true;
        break;
      }
    }
    if (!pairs) {
      out.nondegenerate = false;
      out.witness = g;
      return out;
    }
  }
  return out;
}

}  // namespace tbs
