#pragma once

// The lattice Z^2, the functions det and gcd on it, and Z^2 x| SL(2, Z) acting by
// k -> t + m k.

#include <array>

#include "tbs/scalars.hpp"

namespace tbs {

struct LatticePoint {
  Int q = 0;
  Int r = 0;

  LatticePoint() = default;
  LatticePoint(Int q_, Int r_) : q(std::move(q_)), r(std::move(r_)) {}
  LatticePoint(long q_, long r_) : q(q_), r(r_) {}

  bool is_zero() const { return q == 0 && r == 0; }
  LatticePoint operator+(const LatticePoint& o) const { return {q + o.q, r + o.r}; }
  LatticePoint operator-(const LatticePoint& o) const { return {q - o.q, r - o.r}; }
  LatticePoint operator-() const { return {-q, -r}; }
  std::string str() const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.q == b.q && a.r == b.r; }
  // Lexicographic on (q, r).
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    int c = cmp(a.q, b.q);
    return c != 0 ? c < 0 : a.r < b.r;
  }
};

// [[x, y], [z, w]]
struct Matrix2 {
  Int x = 1, y = 0, z = 0, w = 1;

  static Matrix2 identity() { return {}; }
  Int det() const { return x * w - y * z; }
  Matrix2 operator*(const Matrix2& o) const;
  LatticePoint operator*(const LatticePoint& k) const { return {x * k.q + y * k.r, z * k.q + w * k.r}; }
  Matrix2 inverse() const;  // unimodular matrices only
  std::string str() const;

  friend bool operator==(const Matrix2& a, const Matrix2& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
  }
};

Matrix2 make_matrix(long x, long y, long z, long w);

class AffineSL2 {
 public:
  AffineSL2() = default;
  AffineSL2(LatticePoint t, Matrix2 m);  // requires det m = 1
  static AffineSL2 translation(LatticePoint t) { return AffineSL2(std::move(t), Matrix2{}); }
  static AffineSL2 linear(Matrix2 m) { return AffineSL2(LatticePoint{}, std::move(m)); }

  const LatticePoint& t() const noexcept { return t_; }
  const Matrix2& m() const noexcept { return m_; }
  bool is_identity() const { return t_.is_zero() && m_ == Matrix2{}; }

  friend bool operator==(const AffineSL2& a, const AffineSL2& b) { return a.t_ == b.t_ && a.m_ == b.m_; }

 private:
  LatticePoint t_;
  Matrix2 m_;
};

Int det2(const LatticePoint& k, const LatticePoint& k0);
Int gcd2(const LatticePoint& k);  // gcd2(0) = 0

AffineSL2 affine_mul(const AffineSL2& a, const AffineSL2& b);
AffineSL2 affine_inv(const AffineSL2& a);
LatticePoint affine_act(const AffineSL2& a, const LatticePoint& k);

struct LatticeConstants {
  LatticePoint e1, e2;
  AffineSL2 xi;      // (e1, [[-1, -1], [1, 0]])
  Matrix2 eta;       // [[-1, 0], [0, -1]]
  Matrix2 delta;     // [[1, 1], [0, 1]]
};
const LatticeConstants& constants();

// Position in the square spiral 0, (1,0), (1,1), (0,1), (-1,1), (-1,0), (-1,-1),
// (0,-1), (1,-1), (2,-1), ... (ring by ring, counterclockwise from the east).
Int spiral_index(const LatticePoint& k);
// Ring by ring (max norm), then row by row inside a ring.
bool boxed_row_major_less(const LatticePoint& a, const LatticePoint& b);
LatticePoint spiral_point(std::size_t index);

enum class LatticeOrder { Spiral, BoxedRowMajor };

}  // namespace tbs
