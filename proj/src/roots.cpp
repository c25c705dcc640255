#include "efcert/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "efcert/error.hpp"

namespace efcert {

namespace {

// Fixed-point complex number (re + i im) * 2^-P.
struct Fixed {
  Integer re;
  Integer im;
};

class FixedArith {
 public:
  explicit FixedArith(long bits) : bits_(static_cast<unsigned long>(bits)) {}

  unsigned long bits() const { return bits_; }

  Fixed mul(const Fixed& a, const Fixed& b) const {
    Fixed r{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    mpz_fdiv_q_2exp(r.re.get_mpz_t(), r.re.get_mpz_t(), bits_);
    mpz_fdiv_q_2exp(r.im.get_mpz_t(), r.im.get_mpz_t(), bits_);
    return r;
  }

  std::optional<Fixed> div(const Fixed& a, const Fixed& b) const {
    Integer n = b.re * b.re + b.im * b.im;
    if (n == 0) return std::nullopt;
    Fixed r{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    mpz_mul_2exp(r.re.get_mpz_t(), r.re.get_mpz_t(), bits_);
    mpz_mul_2exp(r.im.get_mpz_t(), r.im.get_mpz_t(), bits_);
    mpz_tdiv_q(r.re.get_mpz_t(), r.re.get_mpz_t(), n.get_mpz_t());
    mpz_tdiv_q(r.im.get_mpz_t(), r.im.get_mpz_t(), n.get_mpz_t());
    return r;
  }

  Fixed one() const {
    Fixed r{1, 0};
    mpz_mul_2exp(r.re.get_mpz_t(), r.re.get_mpz_t(), bits_);
    return r;
  }

  Fixed from_integer(const Integer& v) const {
    Fixed r{v, 0};
    mpz_mul_2exp(r.re.get_mpz_t(), r.re.get_mpz_t(), bits_);
    return r;
  }

  Fixed from_double(double re, double im) const {
    Fixed r;
    mpf_class t(re, 64);
    mpf_mul_2exp(t.get_mpf_t(), t.get_mpf_t(), bits_);
    r.re = mpz_class(t);
    mpf_class u(im, 64);
    mpf_mul_2exp(u.get_mpf_t(), u.get_mpf_t(), bits_);
    r.im = mpz_class(u);
    return r;
  }

 private:
  unsigned long bits_;
};

Fixed rescale(const Fixed& x, long from_bits, long to_bits) {
  Fixed r = x;
  if (to_bits > from_bits) {
    mpz_mul_2exp(r.re.get_mpz_t(), r.re.get_mpz_t(), static_cast<unsigned long>(to_bits - from_bits));
    mpz_mul_2exp(r.im.get_mpz_t(), r.im.get_mpz_t(), static_cast<unsigned long>(to_bits - from_bits));
  }
  return r;
}

double log2_abs(const Integer& v) {
  if (v == 0) return -HUGE_VAL;
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::vector<Fixed> initial_guesses(const std::vector<Integer>& a, const FixedArith& fx) {
  const std::size_t n = a.size() - 1;
  // Fujiwara-type bound 2 max |a_k/a_n|^(1/(n-k)).
  double lead = log2_abs(a[n]);
  double best = -60.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] == 0) continue;
    best = std::max(best, (log2_abs(a[k]) - lead) / static_cast<double>(n - k));
  }
  double radius = std::exp2(std::min(best + 1.0, 60.0));
  std::vector<Fixed> z;
  z.reserve(n);
  const double two_pi = 6.283185307179586;
  for (std::size_t k = 0; k < n; ++k) {
    double angle = two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.push_back(fx.from_double(radius * std::cos(angle), radius * std::sin(angle)));
  }
  return z;
}

// One Aberth sweep; returns log2 of the largest correction (in units of 2^-P).
double aberth_sweep(const std::vector<Integer>& a, std::vector<Fixed>& z, const FixedArith& fx) {
  const std::size_t n = z.size();
  double worst = -HUGE_VAL;
  std::vector<Fixed> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.push_back(fx.from_integer(c));
  for (std::size_t i = 0; i < n; ++i) {
    Fixed val = coeffs[n], der{0, 0};
    for (std::size_t k = n; k-- > 0;) {
      der = fx.mul(der, z[i]);
      der.re += val.re;
      der.im += val.im;
      val = fx.mul(val, z[i]);
      val.re += coeffs[k].re;
      val.im += coeffs[k].im;
    }
    auto ratio = fx.div(val, der);
    if (!ratio) {
      z[i].re += 1;
      z[i].im += 3;
      worst = HUGE_VAL;
      continue;
    }
    Fixed sum{0, 0};
    bool degenerate = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Fixed diff{z[i].re - z[j].re, z[i].im - z[j].im};
      auto inv = fx.div(fx.one(), diff);
      if (!inv) {
        degenerate = true;
        break;
      }
      sum.re += inv->re;
      sum.im += inv->im;
    }
    if (degenerate) {
      z[i].re += 7;
      z[i].im -= 5;
      worst = HUGE_VAL;
      continue;
    }
    Fixed denom = fx.mul(*ratio, sum);
    denom.re = fx.one().re - denom.re;
    denom.im = -denom.im;
    auto corr = fx.div(*ratio, denom);
    if (!corr) corr = ratio;
    z[i].re -= corr->re;
    z[i].im -= corr->im;
    worst = std::max({worst, log2_abs(corr->re), log2_abs(corr->im)});
  }
  return worst;
}

// Exact Gerschgorin inclusion from Weierstrass corrections. Returns the
// isolating disks when they are pairwise disjoint and small enough.
std::optional<std::vector<ComplexBox>> certify(const std::vector<Integer>& a,
                                               const std::vector<Fixed>& z, long bits,
                                               long precision_bits) {
  const std::size_t n = z.size();
  const auto ubits = static_cast<unsigned long>(bits);
  std::vector<ComplexBox> disks;
  disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // N = p(z_i) 2^(P n), D = prod (X_i - X_j) = 2^(P(n-1)) prod (z_i - z_j)
    Integer nre = a[n], nim = 0;
    for (std::size_t k = n; k-- > 0;) {
      Integer tre = nre * z[i].re - nim * z[i].im;
      Integer tim = nre * z[i].im + nim * z[i].re;
      Integer term = a[k];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), ubits * (n - k));
      nre = tre + term;
      nim = tim;
    }
    Integer dre = 1, dim = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Integer xr = z[i].re - z[j].re, xi = z[i].im - z[j].im;
      Integer tre = dre * xr - dim * xi;
      Integer tim = dre * xi + dim * xr;
      dre = std::move(tre);
      dim = std::move(tim);
    }
    if (dre == 0 && dim == 0) return std::nullopt;
    // W = N conj(D) / (2^P a_n |D|^2)
    Integer dn = dre * dre + dim * dim;
    Integer wre_num = nre * dre + nim * dim;
    Integer wim_num = nim * dre - nre * dim;
    Integer wden = dn * a[n];
    mpz_mul_2exp(wden.get_mpz_t(), wden.get_mpz_t(), ubits);
    Rational wre(wre_num, wden), wim(wim_num, wden);
    wre.canonicalize();
    wim.canonicalize();
    Rational zre(z[i].re), zim(z[i].im);
    mpq_div_2exp(zre.get_mpq_t(), zre.get_mpq_t(), ubits);
    mpq_div_2exp(zim.get_mpq_t(), zim.get_mpq_t(), ubits);
    Rational w2 = wre * wre + wim * wim;
    Rational radius = w2 == 0 ? Rational(0) : Rational(static_cast<long>(n - 1)) * sqrt_upper(w2, 40);
    ComplexBox disk(ComplexRational(zre - wre, zim - wim), radius);
    disk = disk.rounded(bits + 8);
    disks.push_back(std::move(disk));
  }
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<unsigned long>(precision_bits));
  for (const auto& d : disks)
    if (d.radius() > target) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational reach = disks[i].radius() + disks[j].radius();
      if ((disks[i].center() - disks[j].center()).norm2() <= reach * reach) return std::nullopt;
    }
  return disks;
}

}  // namespace

std::vector<ComplexBox> isolate_roots(const Polynomial& p, long precision_bits,
                                      const PrecisionPolicy& policy) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "root isolation of the zero polynomial");
  if (!is_squarefree(p)) fail(ErrorCode::InvalidInput, "root isolation requires a squarefree polynomial");
  const long n = p.degree();
  if (n == 0) return {};
  if (n == 1) {
    Rational root = -p.coeff(0) / p.coeff(1);
    return {ComplexBox::exact(ComplexRational(root))};
  }
  std::vector<Integer> a = p.primitive_integers();
  long bits = std::max(policy.start_bits, precision_bits + 2 * static_cast<long>(std::log2(n + 1)) + 16);
  FixedArith fx(bits);
  std::vector<Fixed> z = initial_guesses(a, fx);
  for (;;) {
    if (bits > policy.max_bits)
      fail(ErrorCode::PrecisionExceeded,
           "root isolation exceeded the precision cap of " + std::to_string(policy.max_bits) + " bits");
    const long max_sweeps = 400 + 20 * n;
    for (long sweep = 0; sweep < max_sweeps; ++sweep) {
      double worst = aberth_sweep(a, z, fx);
      if (worst < 6.0) break;
    }
    if (auto disks = certify(a, z, bits, precision_bits)) {
      std::sort(disks->begin(), disks->end(), [](const ComplexBox& x, const ComplexBox& y) {
        if (x.re() != y.re()) return x.re() < y.re();
        return x.im() < y.im();
      });
      return *disks;
    }
    long next = bits * 2;
    for (auto& zi : z) zi = rescale(zi, bits, next);
    bits = next;
    fx = FixedArith(bits);
  }
}

ComplexBox refine_root(const Polynomial& p, const ComplexBox& box, long precision_bits,
                       const PrecisionPolicy& policy) {
  if (box.radius() == 0) return box;
  long bits = precision_bits;
  std::optional<ComplexBox> fallback;
  for (int attempt = 0;; ++attempt) {
    if (bits > policy.max_bits) {
      if (fallback) return *fallback;
      fail(ErrorCode::PrecisionExceeded, "root refinement exceeded the precision cap");
    }
    auto disks = isolate_roots(p, bits, policy);
    const ComplexBox* hit = nullptr;
    int hits = 0;
    for (const auto& d : disks)
      if (d.intersects(box)) {
        ++hits;
        hit = &d;
      }
    if (hits == 1) {
      if (box.contains(*hit) || attempt >= 6) return *hit;
      fallback = *hit;
    }
    if (hits == 0)
      fail(ErrorCode::InvalidInput, "box does not enclose a root of the polynomial");
    bits = bits < 64 ? 64 : bits * 2;
  }
}

}  // namespace efcert
