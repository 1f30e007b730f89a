#include "tbs/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "tbs/errors.hpp"

namespace tbs {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("phase arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  return narrow(static_cast<i128>(a / std::gcd(a, b)) * b);
}

}  // namespace

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  Int num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Int(s);
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational '" + s + "'");
  }
  if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Phase

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::from_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (!v.get_den().fits_slong_p()) throw Error("phase denominator too large");
  Int num = v.get_num();
  Int den = v.get_den();
  Int r = num % den;  // truncates toward zero
  if (r < 0) r += den;
  return Phase(r.get_si(), den.get_si());
}

Phase Phase::parse(std::string_view text) { return from_rational(parse_rational(text)); }

Rational Phase::value() const { return Rational(num_, den_); }

std::string Phase::str() const { return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_); }

Phase Phase::operator+(const Phase& other) const {
  std::int64_t l = lcm_checked(den_, other.den_);
  i128 n = static_cast<i128>(num_) * (l / den_) + static_cast<i128>(other.num_) * (l / other.den_);
  return Phase(narrow(n % l), l);
}

Phase Phase::operator-() const { return Phase(num_ == 0 ? 0 : den_ - num_, den_); }

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

Phase Phase::scaled(std::int64_t n) const {
  i128 v = static_cast<i128>(num_) * (n % den_);
  return Phase(narrow(v % den_), den_);
}

Phase Phase::scaled(const Int& n) const {
  Int r = n % Int(den_);
  return scaled(r.get_si());
}

Phase Phase::divided(std::int64_t n) const {
  if (n == 0) throw InvalidArgument("phase division by zero");
  return Phase(num_, narrow(static_cast<i128>(den_) * n));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw InvalidArgument("euler_phi of nonpositive integer");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::recursive_mutex& poly_mutex() {
  static std::recursive_mutex m;
  return m;
}

// Exact division of `num` by the monic polynomial `den`; both low-to-high.
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<Int> quot(num.size() - dn, Int(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Int lead = num[i];
    quot[i - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error("inexact cyclotomic division");
  }
  return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::int64_t n) {
  if (n <= 0) throw InvalidArgument("cyclotomic polynomial of nonpositive order");
  std::lock_guard lock(poly_mutex());
  static std::map<std::int64_t, std::vector<Int>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Int> p(static_cast<std::size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

namespace detail {

struct CycloData {
  std::int64_t order;
  std::size_t degree;
  // power_residue[e] = x^e mod Phi_N for 0 <= e < N.
  std::vector<std::vector<Int>> power_residue;
};

}  // namespace detail

namespace {

using detail::CycloData;

const CycloData* cyclo_data(std::int64_t n) {
  static std::mutex m;
  static std::unordered_map<std::int64_t, std::unique_ptr<CycloData>> cache;
  std::lock_guard lock(m);
  if (auto it = cache.find(n); it != cache.end()) return it->second.get();

  if (n <= 0) throw InvalidArgument("cyclotomic order must be positive");
  const std::vector<Int>& phi_poly = cyclotomic_polynomial(n);
  auto data = std::make_unique<CycloData>();
  data->order = n;
  data->degree = phi_poly.size() - 1;
  std::size_t deg = data->degree;

  std::vector<Int> cur(deg, Int(0));
  cur[0] = 1;
  if (deg == 0) cur.clear();
  data->power_residue.reserve(static_cast<std::size_t>(n));
  for (std::int64_t e = 0; e < n; ++e) {
    data->power_residue.push_back(cur);
    // multiply by x and fold the overflow term back with the monic relation
    Int lead = deg ? cur[deg - 1] : Int(0);
    for (std::size_t j = deg; j-- > 1;) cur[j] = cur[j - 1];
    if (deg) cur[0] = 0;
    if (lead != 0) {
      for (std::size_t j = 0; j < deg; ++j) cur[j] -= lead * phi_poly[j];
    }
  }
  const CycloData* out = data.get();
  cache.emplace(n, std::move(data));
  return out;
}

// Reduces a vector indexed by exponents mod N into canonical coefficients.
std::vector<Rational> reduce_cyclic(const CycloData& d, const std::vector<Rational>& full) {
  std::vector<Rational> out(d.degree);
  for (std::size_t e = 0; e < full.size(); ++e) {
    if (sgn(full[e]) == 0) continue;
    if (e < d.degree) {
      out[e] += full[e];
      continue;
    }
    const auto& res = d.power_residue[e];
    for (std::size_t j = 0; j < d.degree; ++j) {
      if (res[j] != 0) out[j] += full[e] * res[j];
    }
  }
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return lcm_checked(a, b); }

}  // namespace

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : data_(cyclo_data(1)), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(const detail::CycloData* data, std::vector<Rational> coeffs)
    : data_(data), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_coeffs(std::int64_t order, std::vector<Rational> coeffs) {
  const CycloData* d = cyclo_data(order);
  if (coeffs.size() != d->degree) {
    throw InvalidArgument("cyclotomic of order " + std::to_string(order) + " needs " +
                          std::to_string(d->degree) + " coefficients");
  }
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic(d, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_of_unity(const Phase& phase) {
  const CycloData* d = cyclo_data(phase.den());
  const auto& res = d->power_residue[static_cast<std::size_t>(phase.num())];
  std::vector<Rational> coeffs(res.begin(), res.end());
  return Cyclotomic(d, std::move(coeffs));
}

std::int64_t Cyclotomic::order() const noexcept { return data_->order; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::rebased(std::int64_t m) const {
  if (m <= 0 || m % order() != 0) {
    throw InvalidArgument("cannot rebase order " + std::to_string(order()) + " to " +
                          std::to_string(m));
  }
  if (m == order()) return *this;
  const CycloData* d = cyclo_data(m);
  std::int64_t step = m / order();
  std::vector<Rational> full(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  return Cyclotomic(d, reduce_cyclic(*d, full));
}

Cyclotomic Cyclotomic::conj() const {
  std::int64_t n = order();
  std::vector<Rational> full(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[(n - static_cast<std::int64_t>(i)) % n] = coeffs_[i];
  return Cyclotomic(data_, reduce_cyclic(*data_, full));
}

Cyclotomic Cyclotomic::times_root(const Phase& phase) const {
  if (phase.is_zero()) return *this;
  std::int64_t m = lcm64(order(), phase.den());
  Cyclotomic base = rebased(m);
  std::int64_t shift = phase.num() * (m / phase.den());
  std::vector<Rational> full(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < base.coeffs_.size(); ++i) {
    full[(static_cast<std::int64_t>(i) + shift) % m] = base.coeffs_[i];
  }
  return Cyclotomic(base.data_, reduce_cyclic(*base.data_, full));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  if (order() != other.order()) {
    std::int64_t m = lcm64(order(), other.order());
    return rebased(m) + other.rebased(m);
  }
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] + other.coeffs_[i];
  return Cyclotomic(data_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
  return Cyclotomic(data_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const { return *this + (-other); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  if (order() != other.order()) {
    std::int64_t m = lcm64(order(), other.order());
    return rebased(m) * other.rebased(m);
  }
  std::int64_t n = order();
  std::vector<Rational> full(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      full[(i + j) % static_cast<std::size_t>(n)] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Cyclotomic(data_, reduce_cyclic(*data_, full));
}

Cyclotomic Cyclotomic::operator*(const Rational& scalar) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * scalar;
  return Cyclotomic(data_, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  std::int64_t m = lcm64(a.order(), b.order());
  return a.rebased(m).coeffs_ == b.rebased(m).coeffs_;
}

}  // namespace tbs
