#include "momentcf/hahn.hpp"

#include "momentcf/pochhammer.hpp"

namespace momentcf {

namespace {

Rational guarded_inverse(const Rational& value, const std::string& what) {
  if (value.is_zero()) throw Error(Errc::kParameterPole, what + " vanishes");
  return value.inverse();
}

long require_nonnegative_integer_n(const HahnParams& p) {
  const Rational n = p.B - p.C;
  const auto value = n.to_long();
  if (!value || *value < 0) {
    throw Error(Errc::kNonIntegerN, "N = B - C = " + n.to_string() + " is not a nonnegative integer");
  }
  return *value;
}

}  // namespace

HahnParams HahnOriginal::to_abc() const {
  return {alpha + Rational(1), alpha + beta + N + Rational(2), alpha + beta + Rational(2)};
}

HahnOriginal HahnOriginal::from_abc(const HahnParams& p) {
  return {p.A - Rational(1), p.C - p.A - Rational(1), p.B - p.C};
}

std::vector<Rational> hahn_basis_values(const HahnParams& p, std::size_t order) {
  std::vector<Rational> v{Rational(1)};
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational k(static_cast<long>(n - 1));
    v.push_back(v.back() * (p.A + k) * (p.B + k) * guarded_inverse(p.C + k, "C+" + k.to_string()));
  }
  return v;
}

std::vector<Rational> hahn_moments_newton(const HahnParams& p, std::size_t n) {
  const std::vector<Rational> v = hahn_basis_values(p, n);
  std::vector<Rational> nodes;
  for (std::size_t j = 0; j < n; ++j) nodes.push_back(p.A + Rational(static_cast<long>(j)));
  std::vector<Rational> out;
  for (std::size_t m = 0; m <= n; ++m) {
    const auto c = newton_expand(m, nodes);
    Rational sum(0);
    for (std::size_t k = 0; k <= m; ++k) sum += c[k] * v[k];
    out.push_back(sum);
  }
  return out;
}

std::vector<Rational> hahn_moments_ogf(const HahnParams& p, std::size_t n) {
  std::vector<Rational> nodes;
  for (std::size_t j = 0; j <= n; ++j) nodes.push_back(p.A + Rational(static_cast<long>(j)));
  return moment_ogf(hahn_basis_values(p, n), nodes).coeffs();
}

std::vector<Rational> hahn_moments(const HahnParams& p, std::size_t n) {
  auto newton = hahn_moments_newton(p, n);
  if (newton != hahn_moments_ogf(p, n)) {
    throw Error(Errc::kInvalidArgument, "Newton and generating-function routes disagree");
  }
  return newton;
}

MomentFunctional<Rational> hahn_functional(const HahnParams& p, std::size_t n) {
  return {hahn_moments_newton(p, n), "x"};
}

UPoly<Rational> hahn_poly(const HahnParams& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  UPoly<Rational> out;
  UPoly<Rational> falling(Rational(1));  // (-x)_k = (-x)(-x+1)···(-x+k-1)
  for (long k = 0; k <= nn; ++k) {
    const Rational den = factorial(k) * pochhammer(p.A, k) * pochhammer(p.C - p.B, k);
    const Rational coeff = pochhammer(Rational(-nn), k) * pochhammer(Rational(nn) + p.C - Rational(1), k) *
                           guarded_inverse(den, "(A)_k (C-B)_k");
    out += falling.scaled(coeff);
    falling *= UPoly<Rational>::linear(Rational(k), Rational(-1));
  }
  return out;
}

Rational hahn_triangle_value(const HahnParams& p, std::size_t n, std::size_t m) {
  const long nn = static_cast<long>(n);
  const long mm = static_cast<long>(m);
  return pochhammer(p.A, mm) * pochhammer(p.B, mm) * pochhammer(p.C - p.A, nn) * pochhammer(Rational(-mm), nn) *
         guarded_inverse(pochhammer(p.C, mm + nn) * pochhammer(p.A, nn), "(C)_{m+n} (A)_n");
}

Rational hahn_mixed_value(const HahnParams& p, std::size_t m, std::size_t n) {
  const long nn = static_cast<long>(n);
  const long mm = static_cast<long>(m);
  return pochhammer(p.A, mm + nn) * pochhammer(p.B, mm) * pochhammer(p.C - p.B, nn) *
         guarded_inverse(pochhammer(p.C, mm + nn), "(C)_{m+n}");
}

Rational hahn_norm(const HahnParams& p, std::size_t n) {
  if (n == 0) return Rational(1);
  const long nn = static_cast<long>(n);
  Rational value = factorial(nn) * pochhammer(p.B, nn) * pochhammer(p.C - p.A, nn) *
                   guarded_inverse(pochhammer(p.A, nn) * pochhammer(p.C - p.B, nn) * pochhammer(p.C, nn - 1) *
                                       (p.C + Rational(2 * nn - 1)),
                                   "(A)_n (C-B)_n (C)_{n-1} (C+2n-1)");
  return nn % 2 == 0 ? value : -value;
}

SFrac<Rational> hahn_sfrac(const HahnParams& p, std::size_t depth) {
  SFrac<Rational> s;
  for (std::size_t i = 1; i <= depth; ++i) {
    if (i % 2 == 1) {
      const long n = static_cast<long>(i / 2);  // alpha_{2n+1}
      const Rational nn(n);
      if (n == 0) {
        s.alphas.push_back(p.A * (p.B - p.C) * guarded_inverse(p.C, "C"));
      } else {
        s.alphas.push_back((p.A + nn) * (p.B - p.C - nn) * (p.C + nn - Rational(1)) *
                           guarded_inverse((p.C + Rational(2 * n - 1)) * (p.C + Rational(2 * n)),
                                           "(C+2n-1)(C+2n)"));
      }
    } else {
      const long n = static_cast<long>(i / 2);  // alpha_{2n}
      const Rational nn(n);
      s.alphas.push_back(nn * (p.B + nn - Rational(1)) * (p.C - p.A + nn - Rational(1)) *
                         guarded_inverse((p.C + Rational(2 * n - 2)) * (p.C + Rational(2 * n - 1)),
                                         "(C+2n-2)(C+2n-1)"));
    }
  }
  return s;
}

Rational hahn_alt_odd_alpha(const HahnParams& p, long n) {
  const Rational nn(n);
  return (p.A + nn) * (p.B - p.C - nn) * (p.C + nn - Rational(1)) *
         guarded_inverse((p.C + nn) * (p.C + nn + Rational(1)), "(C+n)(C+n+1)");
}

SFrac<Rational> hahn_aux_sfrac(const HahnParams& p, std::size_t depth) {
  SFrac<Rational> s;
  for (std::size_t i = 1; i <= depth; ++i) {
    const long n = static_cast<long>((i + 1) / 2);
    const Rational nn(n);
    if (i % 2 == 1) {
      // C_{2n-1}
      s.alphas.push_back((p.A + nn - Rational(1)) * (p.B + nn - Rational(1)) * (p.C + nn - Rational(2)) *
                         guarded_inverse((p.C + Rational(2 * n - 3)) * (p.C + Rational(2 * n - 2)),
                                         "(C+2n-3)(C+2n-2)"));
    } else {
      // C_{2n}
      s.alphas.push_back(nn * (p.B - p.C - nn + Rational(1)) * (p.C - p.A + nn - Rational(1)) *
                         guarded_inverse((p.C + Rational(2 * n - 2)) * (p.C + Rational(2 * n - 1)),
                                         "(C+2n-2)(C+2n-1)"));
    }
  }
  return s;
}

TruncSeries<Rational> hahn_aux_series(const HahnParams& p, std::size_t order) {
  std::vector<Rational> nodes;
  for (std::size_t l = 0; l <= order; ++l) nodes.push_back(Rational(static_cast<long>(l)));
  return moment_ogf(hahn_basis_values(p, order), nodes);
}

TruncSeries<Rational> hahn_egf_closed(const HahnParams& p, std::size_t order) {
  const auto arg = trig_arg(TrigArg::kOneMinusExpNeg, order);
  return exp_linear(-p.A, order) * hyper_series<Rational>({p.A, p.B}, {p.C}, arg);
}

TruncSeries<Rational> hahn_egf_pfaff(const HahnParams& p, std::size_t order) {
  // 1 - e^t
  TruncSeries<Rational> arg = -exp_linear(Rational(1), order);
  arg[0] += Rational(1);
  return hyper_series<Rational>({p.A, p.C - p.B}, {p.C}, arg);
}

TruncSeries<Rational> hahn_egf_terminating(const HahnParams& p, std::size_t order) {
  const long big_n = require_nonnegative_integer_n(p);
  const HahnOriginal o = HahnOriginal::from_abc(p);
  const Rational prefactor = pochhammer(o.beta + Rational(1), big_n) *
                             guarded_inverse(pochhammer(o.alpha + o.beta + Rational(2), big_n), "(alpha+beta+2)_N");
  const auto coeffs = hyper_coefficients<Rational>({o.alpha + Rational(1), Rational(-big_n)}, {-o.beta - o.N},
                                                   static_cast<std::size_t>(big_n));
  TruncSeries<Rational> out(order);
  for (long k = 0; k <= big_n; ++k) {
    out += exp_linear(Rational(k), order).scaled(prefactor * coeffs[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<Rational> hahn_finite_sum_moments(const HahnParams& p, std::size_t order) {
  const long big_n = require_nonnegative_integer_n(p);
  const HahnOriginal o = HahnOriginal::from_abc(p);
  const Rational scale =
      factorial(big_n) * guarded_inverse(pochhammer(o.alpha + o.beta + Rational(2), big_n), "(alpha+beta+2)_N");
  std::vector<Rational> out(order + 1, Rational(0));
  for (long x = 0; x <= big_n; ++x) {
    const Rational weight = binomial(o.alpha + Rational(x), x) * binomial(o.beta + Rational(big_n - x), big_n - x);
    Rational power(1);
    for (std::size_t n = 0; n <= order; ++n) {
      out[n] += scale * weight * power;
      power *= Rational(x);
    }
  }
  return out;
}

}  // namespace momentcf
