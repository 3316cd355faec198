#include "momentcf/askey_wilson.hpp"

#include "momentcf/pochhammer.hpp"

namespace momentcf {

namespace {

Rational guarded_inverse(const Rational& value, const std::string& what) {
  if (value.is_zero()) throw Error(Errc::kParameterPole, what + " vanishes");
  return value.inverse();
}

}  // namespace

void AWParams::validate(std::size_t depth) const {
  if (a.is_zero()) throw Error(Errc::kParameterPole, "a must be nonzero");
  if (q.is_zero()) throw Error(Errc::kParameterPole, "q must be nonzero");
  const long k = static_cast<long>(depth);
  if (qpochhammer(a * b * c * d, q, k).is_zero()) throw Error(Errc::kParameterPole, "(abcd; q)_k vanishes");
}

Rational aw_node(const AWParams& p, long j) {
  return (p.q.pow(-j) / p.a + p.a * p.q.pow(j)) / Rational(2);
}

std::vector<Rational> aw_basis_values(const AWParams& p, std::size_t order) {
  p.validate(order);
  std::vector<Rational> v;
  const Rational neg_inv_2a = -guarded_inverse(Rational(2) * p.a, "2a");
  for (std::size_t k = 0; k <= order; ++k) {
    const long kk = static_cast<long>(k);
    v.push_back(aw_linfunc_value(p, k) * neg_inv_2a.pow(kk) * p.q.pow(-(kk * (kk - 1) / 2)));
  }
  return v;
}

std::vector<Rational> aw_moments_series(const AWParams& p, std::size_t n) {
  std::vector<Rational> nodes;
  for (std::size_t j = 0; j <= n; ++j) nodes.push_back(-aw_node(p, static_cast<long>(j)));
  return moment_ogf(aw_basis_values(p, n), nodes).coeffs();
}

std::vector<Rational> aw_moments_newton(const AWParams& p, std::size_t n) {
  const auto v = aw_basis_values(p, n);
  std::vector<Rational> nodes;
  for (std::size_t j = 0; j < n; ++j) nodes.push_back(-aw_node(p, static_cast<long>(j)));
  std::vector<Rational> out;
  for (std::size_t m = 0; m <= n; ++m) {
    const auto c = newton_expand(m, nodes);
    Rational sum(0);
    for (std::size_t k = 0; k <= m; ++k) sum += c[k] * v[k];
    out.push_back(sum);
  }
  return out;
}

Rational aw_moment(const AWParams& p, std::size_t n) { return aw_moments_series(p, n).back(); }

MomentFunctional<Rational> aw_functional(const AWParams& p, std::size_t n) {
  return {aw_moments_series(p, n), "x"};
}

UPoly<Rational> aw_pair_product(const Rational& s, const Rational& q, std::size_t n) {
  UPoly<Rational> out(Rational(1));
  Rational sq = s;  // s q^j
  for (std::size_t j = 0; j < n; ++j) {
    out *= UPoly<Rational>::linear(Rational(1) + sq * sq, Rational(-2) * sq);
    sq *= q;
  }
  return out;
}

Rational aw_linfunc_value(const AWParams& p, std::size_t n) {
  const long k = static_cast<long>(n);
  const Rational num =
      qpochhammer(p.a * p.b, p.q, k) * qpochhammer(p.a * p.c, p.q, k) * qpochhammer(p.a * p.d, p.q, k);
  return num * guarded_inverse(qpochhammer(p.a * p.b * p.c * p.d, p.q, k), "(abcd; q)_n");
}

Rational aw_mixed_value(const AWParams& p, std::size_t n, std::size_t m) {
  const long nn = static_cast<long>(n);
  const long mm = static_cast<long>(m);
  const Rational num = qpochhammer(p.a * p.b, p.q, mm + nn) * qpochhammer(p.a * p.c, p.q, nn) *
                       qpochhammer(p.a * p.d, p.q, nn) * qpochhammer(p.b * p.c, p.q, mm) *
                       qpochhammer(p.b * p.d, p.q, mm);
  return num * guarded_inverse(qpochhammer(p.a * p.b * p.c * p.d, p.q, mm + nn), "(abcd; q)_{m+n}");
}

UPoly<Rational> aw_poly(const AWParams& p, std::size_t n) {
  const long nn = static_cast<long>(n);
  const Rational ab = p.a * p.b, ac = p.a * p.c, ad = p.a * p.d;
  const Rational abcd = ab * p.c * p.d;
  const Rational prefactor = qpochhammer(ab, p.q, nn) * qpochhammer(ac, p.q, nn) * qpochhammer(ad, p.q, nn) *
                             guarded_inverse(p.a, "a").pow(nn);
  UPoly<Rational> out;
  for (long k = 0; k <= nn; ++k) {
    const Rational den = qpochhammer(ab, p.q, k) * qpochhammer(ac, p.q, k) * qpochhammer(ad, p.q, k) *
                         qpochhammer(p.q, p.q, k);
    const Rational coeff = qpochhammer(p.q.pow(-nn), p.q, k) * qpochhammer(abcd * p.q.pow(nn - 1), p.q, k) *
                           p.q.pow(k) * guarded_inverse(den, "4phi3 denominator");
    out += aw_pair_product(p.a, p.q, static_cast<std::size_t>(k)).scaled(coeff);
  }
  return out.scaled(prefactor);
}

}  // namespace momentcf
