#include "momentcf/wilson.hpp"

#include "momentcf/pochhammer.hpp"

namespace momentcf {

namespace {

Rational guarded_inverse(const Rational& value, const char* what) {
  if (value.is_zero()) throw Error(Errc::kParameterPole, std::string(what) + " vanishes");
  return value.inverse();
}

}  // namespace

std::vector<Rational> wilson_moments(const WilsonParams& p, std::size_t n) {
  // row[k] holds w_m(a+k) for the current m; the triangle shrinks by one each step.
  std::vector<Rational> row(n + 1, Rational(1));
  std::vector<Rational> out{Rational(1)};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Rational> next(n - m);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const Rational ak = p.a + Rational(static_cast<long>(k));
      const Rational ratio =
          (ak + p.b) * (ak + p.c) * (ak + p.d) * guarded_inverse(ak + p.b + p.c + p.d, "a+b+c+d+k");
      next[k] = ratio * row[k + 1] - ak * ak * row[k];
    }
    row = std::move(next);
    out.push_back(row[0]);
  }
  return out;
}

Rational wilson_moment(const WilsonParams& p, std::size_t n) { return wilson_moments(p, n).back(); }

MomentFunctional<Rational> wilson_functional(const WilsonParams& p, std::size_t n) {
  return {wilson_moments(p, n), "y"};
}

TruncSeries<Rational> wilson_ogf(const WilsonParams& p, std::size_t order) {
  std::vector<Rational> values;
  std::vector<Rational> nodes;
  Rational v(1);
  for (std::size_t n = 0; n <= order; ++n) {
    const Rational shift = p.a + Rational(static_cast<long>(n));
    if (n > 0) {
      const Rational prev = shift - Rational(1);
      v *= (prev + p.b) * (prev + p.c) * (prev + p.d) * guarded_inverse(prev + p.b + p.c + p.d, "a+b+c+d+k");
    }
    values.push_back(v);
    nodes.push_back(shift * shift);
  }
  return moment_ogf(values, nodes);
}

Rational wilson_A(const WilsonParams& p, long n) {
  const Rational s = p.sum();
  const Rational nn(n);
  return (nn + s - Rational(1)) * (nn + p.a + p.b) * (nn + p.a + p.c) * (nn + p.a + p.d) *
         guarded_inverse((Rational(2 * n) + s - Rational(1)) * (Rational(2 * n) + s), "2n+a+b+c+d-1 or 2n+a+b+c+d");
}

Rational wilson_C(const WilsonParams& p, long n) {
  if (n == 0) return Rational(0);
  const Rational s = p.sum();
  const Rational nn(n);
  return nn * (nn + p.b + p.c - Rational(1)) * (nn + p.b + p.d - Rational(1)) * (nn + p.c + p.d - Rational(1)) *
         guarded_inverse((Rational(2 * n) + s - Rational(2)) * (Rational(2 * n) + s - Rational(1)),
                         "2n+a+b+c+d-2 or 2n+a+b+c+d-1");
}

JFrac<Rational> wilson_jfrac(const WilsonParams& p, std::size_t depth) {
  JFrac<Rational> j;
  for (std::size_t i = 0; i < depth; ++i) {
    const long n = static_cast<long>(i);
    // A_0 has the removable 0/0 of (s-1)/(s-1) when written generically.
    const Rational an = n == 0 ? (p.a + p.b) * (p.a + p.c) * (p.a + p.d) * guarded_inverse(p.sum(), "a+b+c+d")
                               : wilson_A(p, n);
    j.gammas.push_back(an + wilson_C(p, n) - p.a * p.a);
    if (i + 1 < depth) {
      const Rational a_prev = n == 0 ? an : wilson_A(p, n);
      j.betas.push_back(a_prev * wilson_C(p, n + 1));
    }
  }
  return j;
}

SFrac<Rational> wilson_a0_sfrac(const Rational& b, const Rational& c, const Rational& d, std::size_t depth) {
  const Rational s = b + c + d;
  SFrac<Rational> out;
  for (std::size_t i = 0; i < depth; ++i) {
    const Rational n(static_cast<long>(i / 2));
    if (i % 2 == 0) {
      // alpha_{2n+1}
      out.alphas.push_back((b + n) * (c + n) * (d + n) * (s + n - Rational(1)) *
                           guarded_inverse((s + Rational(2) * n - Rational(1)) * (s + Rational(2) * n),
                                           "b+c+d+2n-1 or b+c+d+2n"));
    } else {
      // alpha_{2n+2}
      out.alphas.push_back((n + Rational(1)) * (b + c + n) * (c + d + n) * (b + d + n) *
                           guarded_inverse((s + Rational(2) * n) * (s + Rational(2) * n + Rational(1)),
                                           "b+c+d+2n or b+c+d+2n+1"));
    }
  }
  return out;
}

UPoly<Rational> conjugate_pair_product(const Rational& shift, std::size_t k) {
  UPoly<Rational> out(Rational(1));
  for (std::size_t l = 0; l < k; ++l) {
    const Rational sl = shift + Rational(static_cast<long>(l));
    out *= UPoly<Rational>::linear(sl * sl, Rational(1));
  }
  return out;
}

UPoly<Rational> wilson_poly(const WilsonParams& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  const Rational s = p.sum();
  const Rational top = pochhammer(s + Rational(nn - 1), nn);
  const Rational inv_top = guarded_inverse(top, "(a+b+c+d+n-1)_n");
  UPoly<Rational> out;
  for (long k = 0; k <= nn; ++k) {
    Rational coeff = binomial(nn, k) * pochhammer(s + Rational(nn - 1), k) *
                     pochhammer(p.a + p.b + Rational(k), nn - k) * pochhammer(p.a + p.c + Rational(k), nn - k) *
                     pochhammer(p.a + p.d + Rational(k), nn - k) * inv_top;
    if ((nn - k) % 2 != 0) coeff = -coeff;
    out += conjugate_pair_product(p.a, static_cast<std::size_t>(k)).scaled(coeff);
  }
  return out;
}

Rational wilson_norm(const WilsonParams& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  const Rational s = p.sum();
  const Rational num = factorial(nn) * pochhammer(p.a + p.b, nn) * pochhammer(p.a + p.c, nn) *
                       pochhammer(p.a + p.d, nn) * pochhammer(p.b + p.c, nn) * pochhammer(p.b + p.d, nn) *
                       pochhammer(p.c + p.d, nn);
  return num * guarded_inverse(pochhammer(s + Rational(nn - 1), nn) * pochhammer(s, 2 * nn), "norm denominator");
}

}  // namespace momentcf
