// Exact arithmetic in the Eisenstein integers Z[w], the Gaussian integers
// Z[i], their fraction fields, and the residue fields F_3 = Z[w]/(theta) and
// F_2 = Z[i]/(1+i).
#pragma once

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermlat {

using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Value a + b*w with w a primitive cube root of unity (w^2 + w + 1 = 0).
class EisensteinInt {
 public:
  static constexpr char kTag = 'E';
  static constexpr const char* kName = "Eisenstein";
  /// Order of the complex reflections built from roots of this ring.
  static constexpr int kReflectionOrder = 3;
  static constexpr int kRootNorm = -3;

  EisensteinInt() = default;
  EisensteinInt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  EisensteinInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
  EisensteinInt(long a, long b) : a_(a), b_(b) {}

  static EisensteinInt omega() { return {0, 1}; }
  static EisensteinInt omega_bar() { return {-1, -1}; }
  /// theta = w - conj(w) = 1 + 2w, a square root of -3.
  static EisensteinInt theta() { return {1, 2}; }
  /// Generator of the prime ideal used for reductions (theta).
  static EisensteinInt prime() { return theta(); }
  /// Eigenvalue of a reflection on its root (w).
  static EisensteinInt reflection_unit() { return omega(); }
  /// Units in the fixed backtracking order (1, -1, w, -w, w^2, -w^2).
  static const std::array<EisensteinInt, 6>& units();

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_real() const { return sgn(b_) == 0; }

  EisensteinInt conj() const { return {a_ - b_, -b_}; }
  /// a^2 - ab + b^2
  Integer norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  /// Twice the real part, 2a - b.
  Integer twice_real() const { return 2 * a_ - b_; }

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    Integer bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
  }
  EisensteinInt operator-() const { return {-a_, -b_}; }
  EisensteinInt& operator+=(const EisensteinInt& y) { return *this = *this + y; }
  EisensteinInt& operator-=(const EisensteinInt& y) { return *this = *this - y; }
  EisensteinInt& operator*=(const EisensteinInt& y) { return *this = *this * y; }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Multiplies by an integer scalar.
  EisensteinInt scaled(const Integer& k) const { return {a_ * k, b_ * k}; }

 private:
  Integer a_{0};
  Integer b_{0};
};

/// Value a + b*i.
class GaussianInt {
 public:
  static constexpr char kTag = 'G';
  static constexpr const char* kName = "Gaussian";
  static constexpr int kReflectionOrder = 4;
  static constexpr int kRootNorm = -2;

  GaussianInt() = default;
  GaussianInt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GaussianInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
  GaussianInt(long a, long b) : a_(a), b_(b) {}

  static GaussianInt i() { return {0, 1}; }
  static GaussianInt prime() { return {1, 1}; }
  static GaussianInt reflection_unit() { return i(); }
  /// Units in the fixed backtracking order (1, -1, i, -i).
  static const std::array<GaussianInt, 4>& units();

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_real() const { return sgn(b_) == 0; }

  GaussianInt conj() const { return {a_, -b_}; }
  Integer norm() const { return a_ * a_ + b_ * b_; }
  Integer twice_real() const { return 2 * a_; }

  friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  GaussianInt operator-() const { return {-a_, -b_}; }
  GaussianInt& operator+=(const GaussianInt& y) { return *this = *this + y; }
  GaussianInt& operator-=(const GaussianInt& y) { return *this = *this - y; }
  GaussianInt& operator*=(const GaussianInt& y) { return *this = *this * y; }
  friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  GaussianInt scaled(const Integer& k) const { return {a_ * k, b_ * k}; }

 private:
  Integer a_{0};
  Integer b_{0};
};

template <class R>
concept QuadraticRing = std::same_as<R, EisensteinInt> || std::same_as<R, GaussianInt>;

template <QuadraticRing R>
R conj(const R& x) {
  return x.conj();
}

template <QuadraticRing R>
Integer field_norm(const R& x) {
  return x.norm();
}

template <QuadraticRing R>
struct DivResult {
  R quotient;
  R remainder;
};

/// Rounds n/d to the nearest integer; ties go toward zero. d > 0.
Integer round_half_toward_zero(const Integer& n, const Integer& d);
/// Rounds n/d to the nearest integer; ties go up (translation invariant). d > 0.
Integer round_half_up(const Integer& n, const Integer& d);

/// x = q*y + r with N(r) < N(y). Each coordinate of x/y is rounded to the
/// nearest integer, ties toward zero.
template <QuadraticRing R>
DivResult<R> euclidean_div(const R& x, const R& y) {
  if (y.is_zero()) throw ArithmeticError("euclidean_div: division by zero");
  const R num = x * y.conj();
  const Integer den = y.norm();
  R q{round_half_toward_zero(num.a(), den), round_half_toward_zero(num.b(), den)};
  R r = x - q * y;
  return {std::move(q), std::move(r)};
}

/// Remainder of x modulo y that depends only on the coset x + yR.
template <QuadraticRing R>
R canonical_remainder(const R& x, const R& y) {
  if (y.is_zero()) throw ArithmeticError("canonical_remainder: zero modulus");
  const R num = x * y.conj();
  const Integer den = y.norm();
  R q{round_half_up(num.a(), den), round_half_up(num.b(), den)};
  return x - q * y;
}

template <QuadraticRing R>
bool divides(const R& d, const R& x) {
  if (d.is_zero()) return x.is_zero();
  const R num = x * d.conj();
  const Integer den = d.norm();
  return mpz_divisible_p(num.a().get_mpz_t(), den.get_mpz_t()) &&
         mpz_divisible_p(num.b().get_mpz_t(), den.get_mpz_t());
}

/// x / y, which must be exact.
template <QuadraticRing R>
R exact_div(const R& x, const R& y) {
  if (y.is_zero()) throw ArithmeticError("exact_div: division by zero");
  const R num = x * y.conj();
  const Integer den = y.norm();
  if (!mpz_divisible_p(num.a().get_mpz_t(), den.get_mpz_t()) ||
      !mpz_divisible_p(num.b().get_mpz_t(), den.get_mpz_t()))
    throw ArithmeticError("exact_div: quotient not integral");
  Integer qa, qb;
  mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), den.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), den.get_mpz_t());
  return R{std::move(qa), std::move(qb)};
}

template <QuadraticRing R>
bool is_unit(const R& x) {
  return x.norm() == 1;
}

/// The associate u*x with the lexicographically smallest (a, b) among those
/// with a > 0. Returns {u, u*x}; zero maps to {1, 0}.
template <QuadraticRing R>
std::pair<R, R> canonical_associate(const R& x) {
  if (x.is_zero()) return {R{1}, x};
  const R* best_unit = nullptr;
  R best;
  for (const R& u : R::units()) {
    R candidate = u * x;
    if (sgn(candidate.a()) <= 0) continue;
    if (best_unit == nullptr || candidate.a() < best.a() ||
        (candidate.a() == best.a() && candidate.b() < best.b())) {
      best_unit = &u;
      best = std::move(candidate);
    }
  }
  return {*best_unit, best};
}

/// Element of F_2 or F_3.
class Residue {
 public:
  Residue(unsigned value, unsigned modulus);
  unsigned value() const { return value_; }
  unsigned modulus() const { return modulus_; }

  friend Residue operator+(Residue x, Residue y);
  friend Residue operator-(Residue x, Residue y);
  friend Residue operator*(Residue x, Residue y);
  Residue operator-() const { return Residue(modulus_ - value_, modulus_); }
  Residue inverse() const;
  friend bool operator==(Residue x, Residue y) = default;

 private:
  std::uint8_t value_;
  std::uint8_t modulus_;
};

/// Ring homomorphism Z[w] -> F_3 (kernel theta) or Z[i] -> F_2 (kernel 1+i).
/// The modulus must be an associate of the ring's distinguished prime.
template <QuadraticRing R>
Residue reduce_mod(const R& x, const R& prime) {
  if (prime.is_zero() || prime.norm() != R::prime().norm() || !divides(prime, R::prime()))
    throw ArithmeticError("reduce_mod: unsupported modulus");
  // w = 1 mod theta and i = 1 mod (1+i), so a + b*unit reduces to a + b.
  const unsigned p = static_cast<unsigned>(R::prime().norm().get_ui());
  Integer s = x.a() + x.b();
  Integer m = s % p;
  if (sgn(m) < 0) m += p;
  return Residue(static_cast<unsigned>(m.get_ui()), p);
}

/// Fraction n/d with n in Z[w] or Z[i] and d a positive integer, kept reduced
/// so that gcd(n.a, n.b, d) = 1.
template <QuadraticRing R>
class Fraction {
 public:
  Fraction() : den_(1) {}
  Fraction(R num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(long v) : num_(v), den_(1) {}              // NOLINT(google-explicit-constructor)
  Fraction(R num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw ArithmeticError("Fraction: zero denominator");
    normalize();
  }

  const R& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  /// The numerator, provided the denominator is 1.
  const R& integral_value() const {
    if (!is_integral()) throw ArithmeticError("Fraction: value is not integral");
    return num_;
  }

  Fraction conj() const { return Fraction(num_.conj(), den_, kReduced); }

  friend Fraction operator+(const Fraction& x, const Fraction& y) {
    if (x.den_ == y.den_) return Fraction(x.num_ + y.num_, x.den_);
    return Fraction(x.num_.scaled(y.den_) + y.num_.scaled(x.den_), x.den_ * y.den_);
  }
  friend Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }
  friend Fraction operator*(const Fraction& x, const Fraction& y) {
    if (x.is_zero() || y.is_zero()) return Fraction();
    return Fraction(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Fraction operator/(const Fraction& x, const Fraction& y) {
    if (y.is_zero()) throw ArithmeticError("Fraction: division by zero");
    // x/y = x.num * y.den * conj(y.num) / (x.den * N(y.num))
    return Fraction(x.num_.scaled(y.den_) * y.num_.conj(), x.den_ * y.num_.norm());
  }
  Fraction operator-() const { return Fraction(-num_, den_, kReduced); }
  Fraction& operator+=(const Fraction& y) { return *this = *this + y; }
  Fraction& operator-=(const Fraction& y) { return *this = *this - y; }
  Fraction& operator*=(const Fraction& y) { return *this = *this * y; }
  friend bool operator==(const Fraction& x, const Fraction& y) {
    return x.den_ == y.den_ && x.num_ == y.num_;
  }

 private:
  struct ReducedTag {};
  static constexpr ReducedTag kReduced{};
  Fraction(R num, Integer den, ReducedTag) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (sgn(den_) < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    Integer g = gcd(gcd(num_.a(), num_.b()), den_);
    if (g != 1) {
      num_ = R{num_.a() / g, num_.b() / g};
      den_ /= g;
    }
  }

  R num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);
std::ostream& operator<<(std::ostream& os, const GaussianInt& x);
std::ostream& operator<<(std::ostream& os, const Residue& x);

template <QuadraticRing R>
std::ostream& operator<<(std::ostream& os, const Fraction<R>& x) {
  os << x.num();
  if (x.den() != 1) os << "/" << x.den();
  return os;
}

template <QuadraticRing R>
std::string to_string(const R& x) {
  return "[" + x.a().get_str() + "," + x.b().get_str() + "]";
}

struct QuadraticIntHash {
  template <QuadraticRing R>
  std::size_t operator()(const R& x) const {
    std::size_t h = std::hash<std::string>{}(x.a().get_str(16));
    return h * 1000003u ^ std::hash<std::string>{}(x.b().get_str(16));
  }
};

}  // namespace hermlat
