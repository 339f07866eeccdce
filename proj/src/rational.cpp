#include "mks/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "mks/errors.hpp"

namespace mks {

namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      out.push_back(text[i]);
    }
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw ParseError("not an exact rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(digits), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text, bool allow_decimal) {
  const std::string s = normalize_minus(text);
  if (s.empty()) throw ParseError("empty rational");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const mpz_class n = parse_integer(std::string_view(s).substr(0, slash), text);
    const std::string_view ds = std::string_view(s).substr(slash + 1);
    if (!all_digits(ds)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    const mpz_class d(std::string(ds), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    if (!allow_decimal) throw ParseError("decimal not accepted here, use p/q: '" + std::string(text) + "'");
    std::string_view ip = std::string_view(s).substr(0, dot);
    const std::string_view fp = std::string_view(s).substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) {
      neg = ip[0] == '-';
      ip.remove_prefix(1);
    }
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("bad decimal '" + std::string(text) + "'");
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rational r(mpz_class(whole * scale + frac), scale);
    return neg ? -r : r;
  }
  if (s.find_first_of("eE") != std::string::npos) throw ParseError("exponent notation rejected: '" + std::string(text) + "'");
  return Rational(parse_integer(s, text));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite double");
  mpq_class q(v);
  return Rational(q);
}

Rational Rational::pow2(int exponent) {
  mpz_class p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-exponent));
  return Rational(mpz_class(1), p);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  // Low limbs of numerator and denominator are enough to spread keys.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    if (z == 0) return 0;
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^
           (static_cast<std::size_t>(mpz_size(z.get_mpz_t())) << 1) ^ (sgn(z) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  };
  const std::size_t a = limb(q_.get_num());
  const std::size_t b = limb(q_.get_den());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  if (hi_in < lo_in) return simplest_between(hi_in, lo_in);
  if (lo_in.sign() <= 0 && hi_in.sign() >= 0) return Rational(0);
  if (hi_in.sign() < 0) return -simplest_between(-hi_in, -lo_in);
  // Stern-Brocot descent via continued fractions, 0 < lo <= hi.
  mpq_class lo = lo_in.raw();
  mpq_class hi = hi_in.raw();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(fl) == lo) return Rational(fl);
  if (mpq_class(fl + 1) <= hi) return Rational(mpz_class(fl + 1));
  // Both in (fl, fl+1): recurse on reciprocals of the fractional parts.
  const Rational inner = simplest_between(Rational(mpq_class(1 / (hi - fl))), Rational(mpq_class(1 / (lo - fl))));
  return Rational(fl) + inner.inverse();
}

Rational round_to_dyadic(const Rational& v, int bits) {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(bits));
  const mpq_class scaled = v.raw() * scale + mpq_class(1, 2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(fl, scale);
}

}  // namespace mks
