#include "cutlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cutlab {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part, const char* what, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument(std::string("rational literal: empty ") + what);
    std::size_t i = allow_sign && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("rational literal: sign without digits");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational literal '" + part + "'");
  };
  if (slash == std::string::npos) {
    check_int(s, "numerator", true);
    return Rational(mpz_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num, "numerator", true);
  check_int(den, "denominator", false);  // the sign lives on the numerator
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  return Rational(mpz_class(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rational sq_norm(const QVec& a) { return dot(a, a); }

QVec scale(const QVec& a, const Rational& s) {
  QVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  QVec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  QVec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

int support_size(const QVec& a) {
  int k = 0;
  for (const auto& x : a)
    if (!x.is_zero()) ++k;
  return k;
}

}  // namespace cutlab
