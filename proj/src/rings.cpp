#include "hermlat/rings.hpp"

namespace hermlat {

const std::array<EisensteinInt, 6>& EisensteinInt::units() {
  static const std::array<EisensteinInt, 6> kUnits{
      EisensteinInt{1, 0},  EisensteinInt{-1, 0}, EisensteinInt{0, 1},
      EisensteinInt{0, -1}, EisensteinInt{-1, -1}, EisensteinInt{1, 1}};
  return kUnits;
}

const std::array<GaussianInt, 4>& GaussianInt::units() {
  static const std::array<GaussianInt, 4> kUnits{GaussianInt{1, 0}, GaussianInt{-1, 0},
                                                 GaussianInt{0, 1}, GaussianInt{0, -1}};
  return kUnits;
}

Integer round_half_toward_zero(const Integer& n, const Integer& d) {
  // nearest integer to n/d; |n/d - q| = 1/2 resolves to the q of smaller |q|.
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  Integer twice = 2 * r;
  if (twice > d) {
    q += 1;
  } else if (twice == d) {
    if (sgn(q) < 0) q += 1;  // candidates q and q+1; q+1 is closer to zero
  }
  return q;
}

Integer round_half_up(const Integer& n, const Integer& d) {
  Integer num = 2 * n + d;
  Integer den = 2 * d;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Residue::Residue(unsigned value, unsigned modulus)
    : value_(static_cast<std::uint8_t>(value % modulus)), modulus_(static_cast<std::uint8_t>(modulus)) {
  if (modulus != 2 && modulus != 3) throw ArithmeticError("Residue: modulus must be 2 or 3");
}

namespace {
void check_same_field(Residue x, Residue y) {
  if (x.modulus() != y.modulus()) throw ArithmeticError("Residue: mixed fields");
}
}  // namespace

Residue operator+(Residue x, Residue y) {
  check_same_field(x, y);
  return Residue(x.value_ + y.value_, x.modulus_);
}

Residue operator-(Residue x, Residue y) {
  check_same_field(x, y);
  return Residue(x.value_ + x.modulus_ - y.value_, x.modulus_);
}

Residue operator*(Residue x, Residue y) {
  check_same_field(x, y);
  return Residue(x.value_ * y.value_, x.modulus_);
}

Residue Residue::inverse() const {
  if (value_ == 0) throw ArithmeticError("Residue: inverse of zero");
  // every nonzero element of F_2 and F_3 is its own inverse
  return *this;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
  return os << "(" << x.a() << (sgn(x.b()) < 0 ? "" : "+") << x.b() << "w)";
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& x) {
  return os << "(" << x.a() << (sgn(x.b()) < 0 ? "" : "+") << x.b() << "i)";
}

std::ostream& operator<<(std::ostream& os, const Residue& x) {
  return os << x.value() << " mod " << x.modulus();
}

}  // namespace hermlat
