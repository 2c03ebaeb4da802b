#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutlab {

// Exact rational scalar. Invariants: lowest terms, denominator > 0.
// Backed by GMP; every constructor canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
  explicit Rational(mpq_class q) : v_(std::move(q)) { require_nonzero_den(); v_.canonicalize(); }

  // Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s);

  // "p" when integral, else "p/q" in lowest terms.
  std::string str() const;

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }
  double approx() const { return v_.get_d(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  // floor as an exact rational (integer-valued).
  friend Rational floor(const Rational& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_num_mpz_t(), a.v_.get_den_mpz_t());
    return Rational(q);
  }
  friend Rational ceil(const Rational& a) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), a.v_.get_num_mpz_t(), a.v_.get_den_mpz_t());
    return Rational(q);
  }
  // frac(q) = q - floor(q), always in [0, 1).
  friend Rational frac(const Rational& a) { return a - floor(a); }

  const mpq_class& raw() const { return v_; }

 private:
  void require_nonzero_den() {
    if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0) throw std::domain_error("rational with zero denominator");
  }
  mpq_class v_;
};

using QVec = std::vector<Rational>;

Rational dot(const QVec& a, const QVec& b);
Rational sq_norm(const QVec& a);
QVec scale(const QVec& a, const Rational& s);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
int support_size(const QVec& a);

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace cutlab
