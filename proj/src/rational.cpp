#include "efcert/rational.hpp"

#include <cctype>

#include "efcert/error.hpp"

namespace efcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::InvalidInput, "malformed integer literal");
  Integer v(std::string(s), 10);
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational pow10(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Rational parse_rational(std::string_view text) {
  std::string s;
  // Accept the Unicode minus sign as well as ASCII '-'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      s.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
    }
  }
  if (s.empty()) fail(ErrorCode::InvalidInput, "empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!all_digits(den_text)) fail(ErrorCode::InvalidInput, "malformed rational literal '" + s + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view body = s;
  long exp10 = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    Integer e_val = parse_integer(body.substr(e + 1));
    if (!e_val.fits_slong_p()) fail(ErrorCode::InvalidInput, "exponent out of range");
    exp10 = e_val.get_si();
    body = body.substr(0, e);
  }
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      fail(ErrorCode::InvalidInput, "malformed decimal literal '" + s + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) fail(ErrorCode::InvalidInput, "malformed rational literal '" + s + "'");
    digits = std::string(body);
  }
  Rational r(Integer(digits, 10));
  r *= pow10(exp10);
  if (neg) r = -r;
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

Rational round_to_grid(const Rational& x, long bits) {
  Rational scaled = x;
  if (bits >= 0)
    mpq_mul_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(bits));
  else
    mpq_div_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-bits));
  // floor(scaled + 1/2)
  Rational shifted = scaled + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational r(q);
  if (bits >= 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  else
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-bits));
  return r;
}

Rational ceil_to_grid(const Rational& x, long bits) {
  Rational scaled = x;
  if (bits >= 0)
    mpq_mul_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(bits));
  else
    mpq_div_2exp(scaled.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-bits));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(q);
  if (bits >= 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  else
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-bits));
  return r;
}

long floor_log2(const Rational& x) {
  // floor(log2(|num|/den)) from bit sizes, then correct by one step.
  Integer num = ::abs(x.get_num());
  const Integer& den = x.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^e <= |x| < 2^(e+1) or off by one
  Rational ax(num, den);
  Rational p = 1;
  if (e >= 0) mpq_mul_2exp(p.get_mpq_t(), p.get_mpq_t(), static_cast<unsigned long>(e));
  else mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), static_cast<unsigned long>(-e));
  if (ax < p) return e - 1;
  return e;
}

Rational sqrt_upper(const Rational& x, long bits) {
  if (x <= 0) return 0;
  // sqrt(a/b) = sqrt(a*b)/b, scaled by 4^k to keep `bits` significant bits.
  long mag = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) +
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long k = bits + 2 - mag / 2 + static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  if (k < 0) k = 0;
  Integer ab = x.get_num() * x.get_den();
  mpz_mul_2exp(ab.get_mpz_t(), ab.get_mpz_t(), static_cast<unsigned long>(2 * k));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), ab.get_mpz_t());
  s += 1;
  Rational r(s, x.get_den());
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

Rational sqrt_lower(const Rational& x, long bits) {
  if (x <= 0) return 0;
  long mag = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) +
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  long k = bits + 2 - mag / 2 + static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  if (k < 0) k = 0;
  Integer ab = x.get_num() * x.get_den();
  mpz_mul_2exp(ab.get_mpz_t(), ab.get_mpz_t(), static_cast<unsigned long>(2 * k));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), ab.get_mpz_t());
  Rational r(s, x.get_den());
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& x, unsigned digits, Rational* error) {
  Rational scaled = x * pow10(digits);
  Rational shifted = scaled + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  if (error) *error = abs(Rational(q) / pow10(digits) - x);
  bool neg = q < 0;
  if (neg) q = -q;
  std::string s = q.get_str(10);
  if (digits > 0) {
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
  }
  bool is_zero = q == 0;
  return (neg && !is_zero ? "-" : "") + s;
}

std::string to_decimal_upper(const Rational& x, unsigned digits) {
  Rational scaled = x * pow10(digits);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return to_decimal(Rational(q) / pow10(digits), digits);
}

}  // namespace efcert
