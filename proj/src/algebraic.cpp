#include "efcert/algebraic.hpp"

#include <functional>

#include "efcert/error.hpp"

namespace efcert {

namespace {

// Res_y(A(y), B_x(y)) as a polynomial in x, by evaluation at x = 0..degree and
// interpolation. B_x is given through its integer coefficients at integer x
// with a fixed formal degree, so each specialisation is exact.
Polynomial eliminate(const std::vector<Integer>& a, std::size_t a_degree,
                     const std::function<std::vector<Integer>(long)>& b_at, std::size_t b_degree,
                     std::size_t result_degree) {
  std::vector<Rational> xs, ys;
  xs.reserve(result_degree + 1);
  ys.reserve(result_degree + 1);
  for (std::size_t k = 0; k <= result_degree; ++k) {
    auto x = static_cast<long>(k);
    xs.emplace_back(x);
    ys.emplace_back(sylvester_resultant(a, a_degree, b_at(x), b_degree));
  }
  return interpolate(xs, ys);
}

Integer ipow(long base, std::size_t e) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), base);
  mpz_pow_ui(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

Polynomial normalize_set_poly(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::DomainError, "degenerate resultant construction");
  return squarefree_part(p).primitive();
}

Rational two_pow_neg(long bits) {
  Rational r = 1;
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

long first_bits(const PrecisionPolicy& policy) { return policy.start_bits; }

[[noreturn]] void precision_exceeded(const PrecisionPolicy& policy, const char* what) {
  fail(ErrorCode::PrecisionExceeded, std::string(what) + " undecided at the precision cap of " +
                                         std::to_string(policy.max_bits) + " bits");
}

// The root of squarefree `poly` that lies in every enclosure(bits).
AlgebraicNumber locate_root(const Polynomial& poly,
                            const std::function<std::optional<ComplexBox>(long)>& enclosure,
                            const PrecisionPolicy& policy) {
  if (poly.degree() == 1) return AlgebraicNumber::from_rational(-poly.coeff(0) / poly.coeff(1));
  for (long bits = first_bits(policy); bits <= policy.max_bits; bits *= 2) {
    auto e = enclosure(bits);
    if (!e) continue;
    auto disks = isolate_roots(poly, bits, policy);
    const ComplexBox* hit = nullptr;
    int hits = 0;
    for (const auto& d : disks)
      if (d.intersects(*e)) {
        ++hits;
        hit = &d;
      }
    if (hits == 1) return AlgebraicNumber::unchecked(poly, *hit);
    if (hits == 0) fail(ErrorCode::Contradiction, "enclosure misses every root of the result polynomial");
  }
  precision_exceeded(policy, "root location");
}

// Index (family, root) of the unique disk among `families` meeting `box`,
// provided that disk is disjoint from every other disk. The families hold
// the isolated roots of coprime factors of one squarefree polynomial.
std::optional<std::pair<std::size_t, std::size_t>> classify(
    const ComplexBox& box, const std::vector<const std::vector<ComplexBox>*>& families) {
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (std::size_t r = 0; r < families[f]->size(); ++r)
      if ((*families[f])[r].intersects(box)) {
        if (found) return std::nullopt;
        found = {f, r};
      }
  if (!found) return std::nullopt;
  const ComplexBox& chosen = (*families[found->first])[found->second];
  for (std::size_t f = 0; f < families.size(); ++f)
    for (std::size_t r = 0; r < families[f]->size(); ++r) {
      if (f == found->first && r == found->second) continue;
      if ((*families[f])[r].intersects(chosen)) return std::nullopt;
    }
  return found;
}

std::vector<ComplexBox> isolate_or_empty(const Polynomial& p, long bits, const PrecisionPolicy& policy) {
  if (p.is_constant()) return {};
  return isolate_roots(p, bits, policy);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : poly_(Polynomial{0, 1}), box_(ComplexBox::exact(ComplexRational(0))) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
  return AlgebraicNumber(Polynomial{-r, 1}.primitive(), ComplexBox::exact(ComplexRational(r)));
}

AlgebraicNumber AlgebraicNumber::unchecked(Polynomial poly, ComplexBox box) {
  return AlgebraicNumber(std::move(poly), std::move(box));
}

AlgebraicNumber AlgebraicNumber::from_box(const Polynomial& poly, const ComplexBox& box,
                                          const PrecisionPolicy& policy) {
  if (poly.is_zero() || poly.is_constant())
    fail(ErrorCode::InvalidInput, "defining polynomial must have positive degree");
  Polynomial sq = squarefree_part(poly).primitive();
  for (long bits = first_bits(policy); bits <= policy.max_bits; bits *= 2) {
    auto disks = isolate_roots(sq, bits, policy);
    const ComplexBox* hit = nullptr;
    int hits = 0;
    for (const auto& d : disks)
      if (d.intersects(box)) {
        ++hits;
        hit = &d;
      }
    if (hits == 0) fail(ErrorCode::InvalidInput, "box contains no root of " + sq.to_string());
    if (hits == 1 && box.contains(*hit)) {
      if (sq.degree() == 1) return from_rational(-sq.coeff(0) / sq.coeff(1));
      return AlgebraicNumber(sq, *hit);
    }
  }
  fail(ErrorCode::InvalidInput, "box does not isolate a single root of " + sq.to_string());
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const Polynomial& poly, const PrecisionPolicy& policy) {
  if (poly.is_zero()) fail(ErrorCode::InvalidInput, "roots of the zero polynomial");
  if (poly.is_constant()) return {};
  Polynomial sq = squarefree_part(poly).primitive();
  std::vector<AlgebraicNumber> out;
  if (sq.degree() == 1) {
    out.push_back(from_rational(-sq.coeff(0) / sq.coeff(1)));
    return out;
  }
  // A rational root p/q of a primitive integer polynomial has q | lc, so a
  // disk of radius < 1/(2 lc) pins down the only candidate.
  const Rational lc = abs(Rational(sq.coeff(sq.degree())));
  const long bits = floor_log2(lc) + 3;
  for (auto& d : isolate_roots(sq, policy.start_bits, policy)) {
    ComplexBox fine = refine_root(sq, d, bits, policy);
    Rational scaled = fine.re() * lc + Rational(1, 2);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational cand(n, lc.get_num());
    cand.canonicalize();
    if (fine.contains(ComplexRational(cand)) && sq(cand) == 0)
      out.push_back(from_rational(cand));
    else
      out.push_back(AlgebraicNumber(sq, d));
  }
  return out;
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (poly_.degree() == 1) return -poly_.coeff(0) / poly_.coeff(1);
  return std::nullopt;
}

AlgebraicNumber AlgebraicNumber::refined(long bits, const PrecisionPolicy& policy) const {
  if (box_.radius() <= two_pow_neg(bits)) return *this;
  return AlgebraicNumber(poly_, refine_root(poly_, box_, bits, policy));
}

std::string AlgebraicNumber::to_string(unsigned digits) const {
  if (auto r = as_rational()) return efcert::to_string(*r);
  return box_.to_string(digits) + " root of " + poly_.to_string();
}

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b, const PrecisionPolicy& policy) {
  auto ra = a.as_rational(), rb = b.as_rational();
  if (ra && rb) return *ra == *rb;
  if (!a.box().intersects(b.box())) return false;
  Polynomial g = poly_gcd(a.poly(), b.poly());
  if (g.degree() < 1) return false;
  Polynomial ca = exact_quotient(a.poly(), g), cb = exact_quotient(b.poly(), g);
  for (long bits = first_bits(policy); bits <= policy.max_bits; bits *= 2) {
    auto gd = isolate_or_empty(g, bits, policy);
    auto cad = isolate_or_empty(ca, bits, policy);
    auto cbd = isolate_or_empty(cb, bits, policy);
    auto la = classify(a.refined(bits, policy).box(), {&gd, &cad});
    auto lb = classify(b.refined(bits, policy).box(), {&gd, &cbd});
    if (la && lb) {
      if (la->first != 0 || lb->first != 0) return false;
      return la->second == lb->second;
    }
  }
  precision_exceeded(policy, "algebraic equality");
}

bool alg_is_root_of(const AlgebraicNumber& a, const Polynomial& q, const PrecisionPolicy& policy) {
  if (q.is_zero()) return true;
  if (auto r = a.as_rational()) return q(*r) == 0;
  Polynomial g = poly_gcd(a.poly(), q);
  if (g.degree() < 1) return false;
  if (g.degree() == a.poly().degree()) return true;
  Polynomial co = exact_quotient(a.poly(), g);
  for (long bits = first_bits(policy); bits <= policy.max_bits; bits *= 2) {
    auto gd = isolate_roots(g, bits, policy);
    auto cd = isolate_roots(co, bits, policy);
    if (auto loc = classify(a.refined(bits, policy).box(), {&gd, &cd})) return loc->first == 0;
  }
  precision_exceeded(policy, "root membership");
}

bool alg_is_zero(const AlgebraicNumber& a, const PrecisionPolicy& policy) {
  if (auto r = a.as_rational()) return *r == 0;
  if (a.poly().coeff(0) != 0) return false;
  if (!a.box().contains_zero()) return false;
  return alg_is_root_of(a, Polynomial::z(), policy);
}

AlgebraicNumber alg_neg(const AlgebraicNumber& a) {
  if (auto r = a.as_rational()) return AlgebraicNumber::from_rational(-*r);
  return AlgebraicNumber::unchecked(a.poly().scale_argument(-1).primitive(), -a.box());
}

Polynomial ratio_set_poly(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::InvalidInput, "ratio set of a zero polynomial");
  if (q.coeff(0) == 0) fail(ErrorCode::DomainError, "ratio set: q is divisible by z");
  if (p.is_constant() || q.is_constant()) return Polynomial::constant(1);
  auto pi = p.primitive_integers(), qi = q.primitive_integers();
  const std::size_t dp = pi.size() - 1, dq = qi.size() - 1;
  // Res_y(q(y), p(x y))
  auto b_at = [&](long x) {
    std::vector<Integer> b(dp + 1);
    for (std::size_t k = 0; k <= dp; ++k) b[k] = pi[k] * ipow(x, k);
    return b;
  };
  return normalize_set_poly(eliminate(qi, dq, b_at, dp, dp * dq));
}

Polynomial product_set_poly(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::InvalidInput, "product set of a zero polynomial");
  if (p.is_constant() || q.is_constant()) return Polynomial::constant(1);
  auto pi = p.primitive_integers(), qi = q.primitive_integers();
  const std::size_t dp = pi.size() - 1, dq = qi.size() - 1;
  // Res_y(q(y), y^dp p(x / y))
  auto b_at = [&](long x) {
    std::vector<Integer> b(dp + 1);
    for (std::size_t k = 0; k <= dp; ++k) b[dp - k] = pi[k] * ipow(x, k);
    return b;
  };
  return normalize_set_poly(eliminate(qi, dq, b_at, dp, dp * dq));
}

Polynomial power_set_poly(const Polynomial& p, unsigned n) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "power set of the zero polynomial");
  if (n == 0) fail(ErrorCode::InvalidInput, "power set requires n >= 1");
  if (p.is_constant()) return Polynomial::constant(1);
  if (n == 1) return squarefree_part(p).primitive();
  auto pi = p.primitive_integers();
  const std::size_t dp = pi.size() - 1;
  // Res_y(p(y), x - y^n)
  auto b_at = [&](long x) {
    std::vector<Integer> b(n + 1, Integer(0));
    b[0] = x;
    b[n] = -1;
    return b;
  };
  return normalize_set_poly(eliminate(pi, dp, b_at, n, dp));
}

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b, const PrecisionPolicy& policy) {
  auto ra = a.as_rational(), rb = b.as_rational();
  if (ra && rb) return AlgebraicNumber::from_rational(*ra * *rb);
  if ((ra && *ra == 0) || (rb && *rb == 0)) return AlgebraicNumber::from_rational(0);
  if (ra) {
    // r * b: roots of p_b(z / r)
    return AlgebraicNumber::unchecked(b.poly().scale_argument(1 / *ra).primitive(),
                                      ComplexBox::exact(ComplexRational(*ra)) * b.box());
  }
  if (rb) return alg_mul(b, a, policy);
  Polynomial poly = product_set_poly(a.poly(), b.poly());
  return locate_root(
      poly,
      [&](long bits) -> std::optional<ComplexBox> {
        return a.refined(bits, policy).box() * b.refined(bits, policy).box();
      },
      policy);
}

AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b, const PrecisionPolicy& policy) {
  if (alg_is_zero(b, policy)) fail(ErrorCode::DomainError, "algebraic division by zero");
  auto ra = a.as_rational(), rb = b.as_rational();
  if (ra && rb) return AlgebraicNumber::from_rational(*ra / *rb);
  if (ra && *ra == 0) return AlgebraicNumber::from_rational(0);
  if (rb) {
    return AlgebraicNumber::unchecked(a.poly().scale_argument(*rb).primitive(),
                                      a.box() * ComplexBox::exact(ComplexRational(1 / *rb)));
  }
  Polynomial qb = b.poly().divide_by_z_power(b.poly().z_valuation());
  Polynomial poly = ratio_set_poly(a.poly(), qb);
  return locate_root(
      poly,
      [&](long bits) -> std::optional<ComplexBox> {
        ComplexBox db = b.refined(bits, policy).box();
        if (db.abs_lower() == 0) return std::nullopt;
        return a.refined(bits, policy).box() / db;
      },
      policy);
}

AlgebraicNumber alg_pow(const AlgebraicNumber& a, long n, const PrecisionPolicy& policy) {
  if (n == 0) return AlgebraicNumber::from_rational(1);
  if (n < 0) {
    if (alg_is_zero(a, policy)) fail(ErrorCode::DomainError, "zero raised to a negative power");
    return alg_pow(alg_div(AlgebraicNumber::from_rational(1), a, policy), -n, policy);
  }
  auto un = static_cast<unsigned long>(n);
  if (auto r = a.as_rational()) return AlgebraicNumber::from_rational(efcert::pow(*r, un));
  if (n == 1) return a;
  Polynomial poly = power_set_poly(a.poly(), static_cast<unsigned>(n));
  return locate_root(
      poly, [&](long bits) -> std::optional<ComplexBox> { return a.refined(bits, policy).box().pow(un); },
      policy);
}

namespace {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& a, const PrecisionPolicy& policy) {
  if (auto r = a.as_rational()) {
    if (*r == 1) return 1U;
    if (*r == -1) return 2U;
    return std::nullopt;
  }
  // |a| must be 1.
  if (a.box().abs_lower() > 1 || a.box().abs_upper() < 1) return std::nullopt;
  const auto d = static_cast<unsigned>(a.poly().degree());
  // The minimal polynomial divides poly(); an order-m root of unity has degree phi(m) <= d,
  // and phi(m) >= sqrt(m / 2).
  const unsigned bound = 2 * d * d + 2;
  for (unsigned m = 1; m <= bound; ++m) {
    if (euler_phi(m) > d) continue;
    Polynomial cyc = Polynomial::monomial(1, m) - Polynomial::constant(1);
    if (alg_is_root_of(a, cyc, policy)) return m;
  }
  return std::nullopt;
}

}  // namespace efcert
