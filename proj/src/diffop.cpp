#include "efcert/diffop.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "efcert/error.hpp"

namespace efcert {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) fail(ErrorCode::Cancelled, "psi transform cancelled");
}

}  // namespace

DiffOperator::DiffOperator(std::map<unsigned, LaurentPolynomial> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

DiffOperator DiffOperator::multiplication(const LaurentPolynomial& p) { return term(0, p); }

DiffOperator DiffOperator::derivation(unsigned k) { return term(k, LaurentPolynomial::constant(1)); }

DiffOperator DiffOperator::term(unsigned dorder, const LaurentPolynomial& p) {
  return DiffOperator(std::map<unsigned, LaurentPolynomial>{{dorder, p}});
}

unsigned DiffOperator::order() const {
  if (terms_.empty()) fail(ErrorCode::InvalidInput, "order of the zero operator");
  return terms_.rbegin()->first;
}

LaurentPolynomial DiffOperator::coeff(unsigned dorder) const {
  auto it = terms_.find(dorder);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

long DiffOperator::zmin() const {
  if (terms_.empty()) return 0;
  long m = terms_.begin()->second.zmin();
  for (const auto& [i, p] : terms_) m = std::min(m, p.zmin());
  return m;
}

LaurentPolynomial DiffOperator::apply(const LaurentPolynomial& f) const {
  LaurentPolynomial acc;
  LaurentPolynomial d = f;
  unsigned at = 0;
  for (const auto& [i, p] : terms_) {
    while (at < i) {
      d = d.derivative();
      ++at;
    }
    acc = acc + p * d;
  }
  return acc;
}

DiffOperator DiffOperator::normalized() const {
  if (is_zero()) return {};
  const long shift = -zmin();
  Integer den = 1, content = 0;
  for (const auto& [i, p] : terms_)
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [i, p] : terms_)
    for (const auto& c : p.coefficients()) {
      Integer v = c.get_num() * (den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  Rational scale(den, content);
  scale.canonicalize();
  const auto& lead = terms_.rbegin()->second.coefficients().back();
  if (lead < 0) scale = -scale;
  std::map<unsigned, LaurentPolynomial> out;
  for (const auto& [i, p] : terms_) out.emplace(i, (scale * p).shifted(shift));
  return DiffOperator(std::move(out));
}

DiffOperator DiffOperator::rescaled(const Rational& lambda) const {
  if (lambda == 0) fail(ErrorCode::DomainError, "rescaling by zero");
  // h(z) = f(lambda z) gives h^(i)(z) = lambda^i f^(i)(lambda z).
  std::map<unsigned, LaurentPolynomial> out;
  for (const auto& [i, p] : terms_) out.emplace(i, (1 / efcert::pow(lambda, i)) * p.scale_argument(lambda));
  return DiffOperator(std::move(out));
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  auto terms = a.terms_;
  for (const auto& [i, p] : b.terms_) terms[i] = terms[i] + p;
  return DiffOperator(std::move(terms));
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
  auto terms = a.terms_;
  for (const auto& [i, p] : b.terms_) terms[i] = terms[i] - p;
  return DiffOperator(std::move(terms));
}

DiffOperator operator*(const LaurentPolynomial& p, const DiffOperator& a) {
  std::map<unsigned, LaurentPolynomial> terms;
  for (const auto& [i, q] : a.terms_) terms.emplace(i, p * q);
  return DiffOperator(std::move(terms));
}

std::string DiffOperator::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.to_string() << ")";
    if (it->first == 1) out << "*\xE2\x88\x82";
    if (it->first > 1) out << "*\xE2\x88\x82^" << it->first;
  }
  return out.str();
}

DiffOperator op_compose(const DiffOperator& l1, const DiffOperator& l2) {
  // d^i q = sum_k C(i,k) q^(k) d^(i-k)
  std::map<unsigned, LaurentPolynomial> out;
  for (const auto& [j, q] : l2.terms()) {
    std::vector<LaurentPolynomial> dq{q};
    for (const auto& [i, p] : l1.terms()) {
      while (dq.size() <= i) dq.push_back(dq.back().derivative());
      for (unsigned k = 0; k <= i; ++k) {
        if (dq[k].is_zero()) continue;
        out[i - k + j] = out[i - k + j] + Rational(binomial(i, k)) * (p * dq[k]);
      }
    }
  }
  return DiffOperator(std::move(out));
}

TruncatedSeries op_apply(const DiffOperator& l, const TruncatedSeries& series) {
  if (l.is_zero()) fail(ErrorCode::InvalidInput, "empty operator");
  if (series.coeffs.empty()) fail(ErrorCode::InvalidInput, "insufficient truncation: empty series");
  struct Part {
    long start, end;
    std::vector<Rational> c;
  };
  std::vector<Part> parts;
  TruncatedSeries d = series;
  unsigned at = 0;
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& [i, p] : l.terms()) {
    while (at < i) {
      // A power series stays a power series: its z^-1 coefficient is dropped.
      TruncatedSeries next;
      const std::size_t skip = d.start == 0 ? 1 : 0;
      next.start = d.start == 0 ? 0 : d.start - 1;
      for (std::size_t k = skip; k < d.coeffs.size(); ++k)
        next.coeffs.push_back(d.coeffs[k] * (d.start + static_cast<long>(k)));
      if (next.coeffs.empty()) fail(ErrorCode::InvalidInput, "insufficient truncation for operator order");
      d = std::move(next);
      ++at;
    }
    Part part{d.start + p.zmin(), d.end() + p.zmin(), {}};
    part.c.assign(static_cast<std::size_t>(part.end - part.start), Rational(0));
    const auto& pc = p.coefficients();
    for (std::size_t e = 0; e < pc.size(); ++e)
      for (std::size_t k = 0; k < d.coeffs.size(); ++k) {
        std::size_t idx = e + k;
        if (idx < part.c.size()) part.c[idx] += pc[e] * d.coeffs[k];
      }
    if (first) {
      lo = part.start;
      hi = part.end;
      first = false;
    } else {
      lo = std::min(lo, part.start);
      hi = std::min(hi, part.end);
    }
    parts.push_back(std::move(part));
  }
  if (hi <= lo) fail(ErrorCode::InvalidInput, "insufficient truncation: no coefficient of the result is determined");
  TruncatedSeries out;
  out.start = lo;
  out.coeffs.assign(static_cast<std::size_t>(hi - lo), Rational(0));
  for (const auto& part : parts)
    for (long t = std::max(lo, part.start); t < hi; ++t)
      out.coeffs[static_cast<std::size_t>(t - lo)] += part.c[static_cast<std::size_t>(t - part.start)];
  return out;
}

namespace {

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.substr(i, 3) == "\xE2\x88\x82") {
        s_.push_back('D');
        i += 2;
      } else if (text.substr(i, 3) == "\xE2\x88\x92") {
        s_.push_back('-');
        i += 2;
      } else if (text.substr(i, 2) == "\xC2\xB7") {
        s_.push_back('*');
        i += 1;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
      }
    }
  }

  DiffOperator parse() {
    if (s_.empty()) error("empty operator text");
    DiffOperator r = expr();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::InvalidInput, "operator text, position " + std::to_string(pos_) + ": " + msg);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'D' || c == '(';
  }

  DiffOperator expr() {
    DiffOperator acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    DiffOperator t = term();
    acc = negate ? acc - t : t;
    while (peek() == '+' || peek() == '-') {
      bool minus = s_[pos_++] == '-';
      t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  DiffOperator term() {
    DiffOperator acc = factor();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        acc = op_compose(acc, factor());
      } else if (starts_factor()) {
        acc = op_compose(acc, factor());
      } else {
        return acc;
      }
    }
  }

  DiffOperator factor() {
    DiffOperator base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t begin = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (begin == pos_) error("expected an integer exponent");
    unsigned long e = std::stoul(s_.substr(begin, pos_ - begin));
    if (e > 4096) error("exponent too large");
    if (negative) {
      const auto& t = base.terms();
      if (t.size() != 1 || t.begin()->first != 0 || t.begin()->second.coefficients().size() != 1)
        error("negative exponents apply only to monomials in z");
      const auto& m = t.begin()->second;
      Rational inv = 1 / m.coefficients()[0];
      return DiffOperator::multiplication(
          LaurentPolynomial::monomial(efcert::pow(inv, e), -m.zmin() * static_cast<long>(e)));
    }
    DiffOperator r = DiffOperator::identity();
    for (unsigned long k = 0; k < e; ++k) r = op_compose(r, base);
    return r;
  }

  DiffOperator atom() {
    char c = peek();
    if (c == 'z') {
      ++pos_;
      return DiffOperator::multiplication(LaurentPolynomial::monomial(1, 1));
    }
    if (c == 'D') {
      ++pos_;
      return DiffOperator::derivation(1);
    }
    if (c == '(') {
      ++pos_;
      DiffOperator inner = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/' || peek() == '.') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      return DiffOperator::multiplication(LaurentPolynomial::constant(parse_rational(s_.substr(begin, pos_ - begin))));
    }
    error(c == '\0' ? "unexpected end of text" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffOperator parse_operator(std::string_view text) { return OperatorParser(text).parse(); }

InhomogeneousResult psi_transform_inhomogeneous(const DiffOperator& l, const std::vector<Rational>& initial_values,
                                                std::stop_token stop) {
  if (l.is_zero()) fail(ErrorCode::InvalidInput, "psi transform of the empty operator");
  if (initial_values.size() < l.order())
    fail(ErrorCode::InvalidInput, "psi transform needs " + std::to_string(l.order()) + " initial values, got " +
                                      std::to_string(initial_values.size()));
  // z^N l still annihilates f; afterwards every monomial is z^a d^b with a >= 0.
  const long shift = std::max(0L, -l.zmin());
  const DiffOperator T = DiffOperator::term(1, LaurentPolynomial::monomial(1, 2)) +
                         DiffOperator::multiplication(LaurentPolynomial::monomial(1, 1));
  std::vector<DiffOperator> t_pow{DiffOperator::identity()};

  InhomogeneousResult out;
  for (const auto& [b, p] : l.terms()) {
    // psi(f^(b)) = z^-b psi(f) - r_b with r_b = sum_{j<b} a_j z^(j-b)
    LaurentPolynomial r_b;
    for (unsigned j = 0; j < b; ++j) r_b = r_b + LaurentPolynomial::monomial(initial_values[j], static_cast<long>(j) - static_cast<long>(b));
    const DiffOperator z_minus_b = DiffOperator::multiplication(LaurentPolynomial::monomial(1, -static_cast<long>(b)));
    const LaurentPolynomial ps = p.shifted(shift);
    for (std::size_t k = 0; k < ps.coefficients().size(); ++k) {
      const Rational& c = ps.coefficients()[k];
      if (c == 0) continue;
      check_stop(stop);
      const auto a = static_cast<std::size_t>(ps.zmin()) + k;
      while (t_pow.size() <= a) t_pow.push_back(op_compose(T, t_pow.back()));
      out.op = out.op + LaurentPolynomial::constant(c) * op_compose(t_pow[a], z_minus_b);
      if (!r_b.is_zero()) out.remainder = out.remainder + c * t_pow[a].apply(r_b);
    }
  }
  return out;
}

DiffOperator psi_transform(const DiffOperator& l, const std::vector<Rational>& initial_values, std::stop_token stop) {
  InhomogeneousResult r = psi_transform_inhomogeneous(l, initial_values, stop);
  if (r.op.is_zero()) fail(ErrorCode::Unsupported, "psi transform collapsed to the zero operator");
  long lowest = r.op.zmin();
  if (!r.remainder.is_zero()) lowest = std::min(lowest, r.remainder.zmin());
  const long n = std::max(0L, -lowest);
  DiffOperator m = LaurentPolynomial::monomial(1, n) * r.op;
  LaurentPolynomial rem = r.remainder.shifted(n);
  if (!rem.is_zero()) {
    check_stop(stop);
    m = op_compose(DiffOperator::derivation(static_cast<unsigned>(rem.zmax() + 1)), m);
  }
  return m.normalized();
}

Polynomial leading_coefficient(const DiffOperator& l) {
  if (l.is_zero()) fail(ErrorCode::InvalidInput, "leading coefficient of the empty operator");
  const long n = std::max(0L, -l.zmin());
  return l.coeff(l.order()).shifted(n).to_polynomial().primitive();
}

Rational Recurrence::residual(long n, const std::vector<Rational>& c) const {
  Rational acc = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    long m = n + static_cast<long>(j);
    if (m < 0) continue;
    if (m >= static_cast<long>(c.size())) fail(ErrorCode::InvalidInput, "recurrence residual beyond sequence");
    acc += q[j](Rational(n)) * c[static_cast<std::size_t>(m)];
  }
  return acc;
}

Recurrence recurrence_from_ode(const DiffOperator& l) {
  if (l.is_zero()) fail(ErrorCode::InvalidInput, "recurrence of the empty operator");
  // z^e d^b maps c_m z^m to falling(m, b) c_m z^(m - b + e): shift sigma = b - e.
  long smin = 0, smax = 0;
  bool first = true;
  for (const auto& [b, p] : l.terms()) {
    long hi = static_cast<long>(b) - p.zmin(), lo = static_cast<long>(b) - p.zmax();
    smin = first ? lo : std::min(smin, lo);
    smax = first ? hi : std::max(smax, hi);
    first = false;
  }
  Recurrence rec;
  rec.offset = -smin;
  rec.q.assign(static_cast<std::size_t>(smax - smin + 1), Polynomial());
  for (const auto& [b, p] : l.terms()) {
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
      const Rational& c = p.coefficients()[k];
      if (c == 0) continue;
      long e = p.zmin() + static_cast<long>(k);
      long j = static_cast<long>(b) - e - smin;
      Polynomial falling = Polynomial::constant(c);
      for (unsigned t = 0; t < b; ++t) falling = falling * Polynomial{Rational(j - static_cast<long>(t)), 1};
      rec.q[static_cast<std::size_t>(j)] = rec.q[static_cast<std::size_t>(j)] + falling;
    }
  }
  return rec;
}

std::vector<Rational> solve_recurrence(const Recurrence& rec, const std::vector<Rational>& prefix, std::size_t count) {
  const long span = static_cast<long>(rec.span());
  std::vector<Rational> c(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(std::min(count, prefix.size())));
  for (long n = -span; n + span < static_cast<long>(c.size()); ++n)
    if (rec.residual(n, c) != 0)
      fail(ErrorCode::InvalidInput, "initial values violate the recurrence at index " + std::to_string(n + span));
  const Polynomial& top = rec.q.back();
  while (c.size() < count) {
    const long n = static_cast<long>(c.size()) - span;
    Rational lead = top(Rational(n));
    if (lead == 0)
      fail(ErrorCode::Unsupported,
           "coefficient " + std::to_string(c.size()) + " is not determined by the recurrence; supply more initial values");
    Rational acc = 0;
    for (long j = 0; j < span; ++j) {
      long m = n + j;
      if (m >= 0) acc += rec.q[static_cast<std::size_t>(j)](Rational(n)) * c[static_cast<std::size_t>(m)];
    }
    c.push_back(-acc / lead);
  }
  return c;
}

}  // namespace efcert
