#pragma once

// Exact scalars: circle-group phases (elements of Q/Z) and elements of cyclotomic
// fields Q(zeta_N). A Phase p/q stands for the unimodular number exp(2 pi i p/q);
// multiplication on the circle is addition of phases.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tbs {

using Int = mpz_class;
using Rational = mpq_class;

std::string to_string(const Int& v);
std::string to_string(const Rational& v);  // always "a/b", b > 0
Rational parse_rational(std::string_view text);

class Phase {
 public:
  Phase() = default;
  // Any integers with den != 0; the value is reduced into [0, 1) and to lowest terms.
  Phase(std::int64_t num, std::int64_t den);

  static Phase from_rational(const Rational& value);
  static Phase parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  Rational value() const;
  std::string str() const;

  Phase operator+(const Phase& other) const;
  Phase operator-(const Phase& other) const;
  Phase operator-() const;
  Phase& operator+=(const Phase& other) { return *this = *this + other; }
  Phase& operator-=(const Phase& other) { return *this = *this - other; }

  Phase scaled(std::int64_t n) const;
  Phase scaled(const Int& n) const;
  // value()/n for the representative value() in [0, 1); one of the n solutions
  // of n*x = *this.
  Phase divided(std::int64_t n) const;

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase&, const Phase&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Phase phase_add(const Phase& a, const Phase& b) { return a + b; }
inline Phase phase_scale(const Phase& a, std::int64_t n) { return a.scaled(n); }

std::int64_t euler_phi(std::int64_t n);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Int>& cyclotomic_polynomial(std::int64_t n);

namespace detail {
struct CycloData;
}

// An element of Q(zeta_N) stored as the residue of a polynomial in zeta_N modulo
// the N-th cyclotomic polynomial: exactly euler_phi(N) rational coefficients.
// Operands of different orders are rebased to the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& value);  // NOLINT: rationals embed implicitly
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT

  static Cyclotomic from_coeffs(std::int64_t order, std::vector<Rational> coeffs);
  // zeta_den^num, in Q(zeta_den).
  static Cyclotomic root_of_unity(const Phase& phase);

  std::int64_t order() const noexcept;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  Cyclotomic rebased(std::int64_t order) const;
  Cyclotomic conj() const;
  Cyclotomic times_root(const Phase& phase) const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator*(const Rational& scalar) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const detail::CycloData* data, std::vector<Rational> coeffs);

  const detail::CycloData* data_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic phase_to_cyclotomic(const Phase& p) { return Cyclotomic::root_of_unity(p); }
inline Cyclotomic cyc_add(const Cyclotomic& x, const Cyclotomic& y) { return x + y; }
inline Cyclotomic cyc_mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
inline Cyclotomic cyc_neg(const Cyclotomic& x) { return -x; }
inline Cyclotomic cyc_conj(const Cyclotomic& x) { return x.conj(); }
inline Cyclotomic cyc_rebase(const Cyclotomic& x, std::int64_t m) { return x.rebased(m); }

}  // namespace tbs
