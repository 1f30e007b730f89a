#include "tbs/lattice.hpp"

#include "tbs/errors.hpp"

namespace tbs {

std::string LatticePoint::str() const { return "(" + to_string(q) + "," + to_string(r) + ")"; }

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return {x * o.x + y * o.z, x * o.y + y * o.w, z * o.x + w * o.z, z * o.y + w * o.w};
}

Matrix2 Matrix2::inverse() const {
  Int d = det();
  if (d == 1) return {w, -y, -z, x};
  if (d == -1) return {-w, y, z, -x};
  throw InvalidArgument("matrix is not unimodular");
}

std::string Matrix2::str() const {
  return "[[" + to_string(x) + "," + to_string(y) + "],[" + to_string(z) + "," + to_string(w) + "]]";
}

Matrix2 make_matrix(long x, long y, long z, long w) { return {Int(x), Int(y), Int(z), Int(w)}; }

AffineSL2::AffineSL2(LatticePoint t, Matrix2 m) : t_(std::move(t)), m_(std::move(m)) {
  if (m_.det() != 1) throw InvalidArgument("matrix " + m_.str() + " does not have determinant 1");
}

Int det2(const LatticePoint& k, const LatticePoint& k0) { return k.q * k0.r - k.r * k0.q; }

Int gcd2(const LatticePoint& k) {
  Int g;
  mpz_gcd(g.get_mpz_t(), k.q.get_mpz_t(), k.r.get_mpz_t());
  return g;
}

AffineSL2 affine_mul(const AffineSL2& a, const AffineSL2& b) {
  return AffineSL2(a.t() + a.m() * b.t(), a.m() * b.m());
}

AffineSL2 affine_inv(const AffineSL2& a) {
  Matrix2 inv = a.m().inverse();
  return AffineSL2(-(inv * a.t()), inv);
}

LatticePoint affine_act(const AffineSL2& a, const LatticePoint& k) { return a.t() + a.m() * k; }

const LatticeConstants& constants() {
  static const LatticeConstants c{
      LatticePoint(1, 0),
      LatticePoint(0, 1),
      AffineSL2(LatticePoint(1, 0), make_matrix(-1, -1, 1, 0)),
      make_matrix(-1, 0, 0, -1),
      make_matrix(1, 1, 0, 1),
  };
  return c;
}

Int spiral_index(const LatticePoint& k) {
  Int aq = abs(k.q), ar = abs(k.r);
  Int ring = aq > ar ? aq : ar;
  if (ring == 0) return 0;
  Int start = (2 * ring - 1) * (2 * ring - 1);
  Int offset;
  if (k.q == ring && k.r > -ring) {
    offset = k.r + ring - 1;
  } else if (k.r == ring) {
    offset = 2 * ring + (ring - 1 - k.q);
  } else if (k.q == -ring) {
    offset = 4 * ring + (ring - 1 - k.r);
  } else {
    offset = 6 * ring + (k.q + ring - 1);
  }
  return start + offset;
}

LatticePoint spiral_point(std::size_t index) {
  if (index == 0) return {};
  long ring = 1;
  while (static_cast<std::size_t>((2 * ring + 1) * (2 * ring + 1)) <= index) ++ring;
  long off = static_cast<long>(index) - (2 * ring - 1) * (2 * ring - 1);
  if (off < 2 * ring) return {ring, off - ring + 1};
  off -= 2 * ring;
  if (off < 2 * ring) return {ring - 1 - off, ring};
  off -= 2 * ring;
  if (off < 2 * ring) return {-ring, ring - 1 - off};
  off -= 2 * ring;
  return {off - ring + 1, -ring};
}

bool boxed_row_major_less(const LatticePoint& a, const LatticePoint& b) {
  Int ra = abs(a.q) > abs(a.r) ? Int(abs(a.q)) : Int(abs(a.r));
  Int rb = abs(b.q) > abs(b.r) ? Int(abs(b.q)) : Int(abs(b.r));
  if (ra != rb) return ra < rb;
  if (a.r != b.r) return a.r < b.r;
  return a.q < b.q;
}

}  // namespace tbs
