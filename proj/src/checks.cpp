#include "momentcf/checks.hpp"

#include <algorithm>
#include <map>

#include "momentcf/cdh.hpp"
#include "momentcf/contfrac.hpp"
#include "momentcf/dumont_foata.hpp"
#include "momentcf/pochhammer.hpp"
#include "momentcf/random.hpp"
#include "momentcf/sequences.hpp"

namespace momentcf {

namespace {

bool is_pole(Errc code) {
  return code == Errc::kParameterPole || code == Errc::kDenominatorParameterPole ||
         code == Errc::kDivisionByZero || code == Errc::kNotInvertible;
}

std::string point_text(std::initializer_list<std::pair<const char*, Rational>> values) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, value] : values) {
    out += (first ? "" : ", ") + std::string(name) + "=" + value.to_string();
    first = false;
  }
  return out + ")";
}

/// Runs `body` at `count` random points drawn by `draw`, redrawing whenever a
/// point hits a pole of some closed form. Each accepted point's cases land in
/// a sub-report named after the point.
template <class Draw, class Body>
void for_random_points(CheckReport& report, RationalSampler& rng, int count, Draw draw, Body body) {
  int accepted = 0;
  int rejected = 0;
  while (accepted < count) {
    auto [point, name] = draw(rng);
    CheckReport sub;
    sub.id = name;
    try {
      body(point, sub);
    } catch (const Error& e) {
      if (!is_pole(e.code())) throw;
      if (++rejected > 50 * count) throw Error(Errc::kInvalidArgument, "too many random points hit poles");
      continue;
    }
    report.absorb(sub);
    ++accepted;
  }
  if (rejected > 0) report.note("redrew " + std::to_string(rejected) + " random points that hit poles");
}

CheckReport start(std::string id, const CheckOptions& options, bool randomized) {
  CheckReport report;
  report.id = std::move(id);
  if (randomized) report.seed = options.seed;
  return report;
}

std::vector<Rational> coeffs_of(const TruncSeries<Rational>& s) { return s.coeffs(); }

Rational inv_factorial(long n) { return factorial(n).inverse(); }

// Wilson and Hahn points use small rationals; pole rejection handles the rest.
std::pair<WilsonParams, std::string> draw_wilson(RationalSampler& rng) {
  WilsonParams p{rng.next(), rng.next(), rng.next(), rng.next()};
  return {p, point_text({{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}})};
}

std::pair<HahnParams, std::string> draw_hahn(RationalSampler& rng) {
  HahnParams p{rng.nonzero(), rng.nonzero(), rng.nonzero()};
  return {p, point_text({{"A", p.A}, {"B", p.B}, {"C", p.C}})};
}

std::pair<AWParams, std::string> draw_aw(RationalSampler& rng) {
  AWParams p{rng.unit_interval(), rng.nonzero(5, 7), rng.nonzero(5, 7), rng.nonzero(5, 7), rng.nonzero(5, 7)};
  return {p, point_text({{"q", p.q}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}})};
}

std::pair<DumontFoataParams<Rational>, std::string> draw_df(RationalSampler& rng) {
  DumontFoataParams<Rational> p{rng.next(), rng.next(), rng.next(), rng.next(), rng.next(), rng.next()};
  return {p, point_text({{"alpha", p.alpha},
                         {"alpha_bar", p.alpha_bar},
                         {"beta", p.beta},
                         {"beta_bar", p.beta_bar},
                         {"gamma", p.gamma},
                         {"gamma_bar", p.gamma_bar}})};
}

// A vanishing alpha before the last one makes the fraction finite; the later
// closed-form alphas are then not determined by the moments, so only the
// prefix before the zero is compared.
void expect_sfrac_match(CheckReport& r, const SFrac<Rational>& computed, const SFrac<Rational>& closed,
                        const std::string& what) {
  const auto last = closed.alphas.empty() ? closed.alphas.end() : closed.alphas.end() - 1;
  const auto zero = std::find_if(closed.alphas.begin(), last, [](const Rational& a) { return a.is_zero(); });
  if (zero == last) {
    r.expect_equal(computed.alphas, closed.alphas, what);
    return;
  }
  r.expect(computed.terminates, what + ": a closed-form alpha vanishes but the inversion did not terminate");
  std::vector<Rational> got = computed.alphas;
  while (!got.empty() && got.back().is_zero()) got.pop_back();
  r.expect_equal(got, std::vector<Rational>(closed.alphas.begin(), zero), what + " (finite fraction)");
}

const AWParams kAWFixedPoint{Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11)};

// ---------------------------------------------------------------------------
// Genocchi and median Genocchi numbers

CheckReport check_genocchi_fourway(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(10);
  CheckReport r = start("genocchi-fourway", o, false);
  std::vector<Rational> direct;
  for (std::size_t k = 0; k <= n; ++k) direct.push_back(genocchi(static_cast<long>(2 * k + 2)));
  r.expect_equal(coeffs_of(cf_to_series(genocchi_sfrac(n), n)), direct, "S-fraction expansion vs G_{2n+2}");
  r.expect_equal(cdh_moments(CdhParams<Rational>{0, 1, 1}, n), direct, "mu_n(0,1,1) vs G_{2n+2}");
  // x tan(x/2) = sum G_m x^m/m!
  const std::size_t order = 2 * n + 2;
  const auto half = Rational(1, 2);
  const auto tan_half = sin_linear(half, order) * reciprocal(cos_linear(half, order));
  const auto egf = egf_inverse(TruncSeries<Rational>::monomial(1, Rational(1), order) * tan_half);
  std::vector<Rational> from_egf;
  for (std::size_t k = 0; k <= n; ++k) from_egf.push_back(egf[2 * k + 2]);
  r.expect_equal(from_egf, direct, "x tan(x/2) coefficients vs G_{2n+2}");
  for (std::size_t m = 0; m <= order; m += 2) {
    if (m == 0) r.expect_equal(egf[0], Rational(0), "constant term of x tan(x/2)");
  }
  for (std::size_t m = 1; m <= order; m += 2) {
    r.expect_equal(egf[m], Rational(0), "odd coefficient t^" + std::to_string(m) + " of x tan(x/2)");
  }
  return r;
}

CheckReport check_median_genocchi_triple(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(8);
  CheckReport r = start("median-genocchi-triple", o, false);
  std::vector<Rational> h;  // H_1, H_3, ..., H_{2n+3}
  for (std::size_t k = 0; k <= n + 1; ++k) h.push_back(median_genocchi(static_cast<long>(k)));
  const std::vector<Rational> h_low(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n + 1));
  const std::vector<Rational> h_high(h.begin() + 1, h.end());

  // Route 1: the S-fraction with coefficients 1,1,4,4,9,9,...
  r.expect_equal(coeffs_of(cf_to_series(median_genocchi_sfrac(n), n)), h_low, "S-fraction expansion vs H_{2n+1}");

  // Route 2: Gamma_{n+1}(1,1,1,0,1,1), which is H_{2n+3}; its J-fraction is
  // the inner fraction of the odd contraction.
  const DumontFoataParams<Rational> df{1, 1, 1, 0, 1, 1};
  const auto gammas = dumont_foata(df, n + 1);
  r.expect_equal(gammas, h_high, "Gamma_{n+1}(1,1,1,0,1,1) vs H_{2n+3}");
  r.expect_equal(coeffs_of(cf_to_series(median_genocchi_jfrac(n + 1), n)), h_high,
                 "J(2·1², (1·2)², 2·2², ...) vs H_{2n+3}");
  const auto odd = contract(median_genocchi_sfrac(2 * n + 2), ContractionKind::kOdd);
  r.expect(odd.lead && *odd.lead == Rational(1), "odd contraction lead coefficient is 1");
  r.expect_equal(std::vector<Rational>(odd.jfrac.gammas.begin(), odd.jfrac.gammas.begin() + static_cast<std::ptrdiff_t>(n + 1)),
                 median_genocchi_jfrac(n + 1).gammas, "odd contraction gammas");

  // Route 3: shifted continuous dual Hahn moments.
  const Rational quarter(-1, 4);
  const auto shifted = shift_moments(cdh_functional(CdhParams<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)}, n),
                                     quarter);
  r.expect_equal(shifted.moments, h_low, "shift_moments(mu(1/2,1/2,1/2), -1/4) vs H_{2n+1}");
  const auto sub = df_to_cdh(df);
  r.expect_equal(std::vector<Rational>{sub.cdh.a, sub.cdh.b, sub.cdh.c, sub.d},
                 std::vector<Rational>{Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 4)},
                 "parameter substitution at (1,1,1,0,1,1)");
  const auto shifted_high = shift_moments(cdh_functional(sub.cdh, n), sub.d);
  r.expect_equal(shifted_high.moments, h_high, "shift_moments(mu(3/2,1/2,1/2), -1/4) vs H_{2n+3}");
  if (r.passed) r.headline = "3 routes agree";
  return r;
}

CheckReport check_gandhi(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(10);
  CheckReport r = start("gandhi", o, false);
  const auto mu = cdh_moments(CdhParams<Rational>{1, 1, 1}, n);
  for (std::size_t k = 0; k <= n; ++k) {
    r.expect_equal(mu[k], genocchi(static_cast<long>(2 * k + 4)), "mu_" + std::to_string(k) + "(1,1,1) vs G_{2n+4}");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Wilson

CheckReport check_wilson_coherence(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(8);
  CheckReport r = start("wilson-coherence", o, true);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_wilson, [&](const WilsonParams& p, CheckReport& sub) {
    const auto w = wilson_moments(p, n);
    sub.expect_equal(coeffs_of(cf_to_series(wilson_jfrac(p, n + 1), n)), w, "J-fraction expansion vs recurrence");
    sub.expect_equal(coeffs_of(wilson_ogf(p, n)), w, "sum formula vs recurrence");
    if (n >= 1) {
      const Rational w1 = (p.a + p.b) * (p.a + p.c) * (p.a + p.d) / p.sum() - p.a * p.a;
      sub.expect_equal(w[1], w1, "w_1 closed form");
    }
  });
  return r;
}

CheckReport check_wilson_a0_sfrac(const CheckOptions& o) {
  const std::size_t depth = o.depth.value_or(8);
  CheckReport r = start("wilson-a0-sfrac", o, true);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_wilson, [&](WilsonParams p, CheckReport& sub) {
    p.a = Rational(0);
    const auto s = series_to_sfrac(wilson_functional(p, depth));
    expect_sfrac_match(sub, s, wilson_a0_sfrac(p.b, p.c, p.d, depth), "S-fraction of w_n(0) vs closed form");
  });
  return r;
}

CheckReport check_wilson_functional(const CheckOptions& o) {
  CheckReport r = start("wilson-functional", o, true);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_wilson, [&](const WilsonParams& p, CheckReport& sub) {
    const auto functional = wilson_functional(p, 10);
    const UPoly<Rational> y = UPoly<Rational>::x();
    const Rational s = p.sum();
    // L(y^n prod_{l<k}((a+l)²+y)) = (a+b)_k(a+c)_k(a+d)_k/(a+b+c+d)_k · w_n(a+k)
    for (long k = 0; k <= 3; ++k) {
      WilsonParams shifted = p;
      shifted.a = p.a + Rational(k);
      const auto wk = wilson_moments(shifted, 3);
      const Rational factor = pochhammer(p.a + p.b, k) * pochhammer(p.a + p.c, k) * pochhammer(p.a + p.d, k) /
                              pochhammer(s, k);
      UPoly<Rational> yn(Rational(1));
      for (std::size_t nn = 0; nn <= 3; ++nn) {
        sub.expect_equal(functional.apply(yn * conjugate_pair_product(p.a, static_cast<std::size_t>(k))),
                         factor * wk[nn], "shifted-moment lemma at n=" + std::to_string(nn) + ", k=" + std::to_string(k));
        yn *= y;
      }
    }
    // Mixed a/b products.
    for (long m = 0; m <= 3; ++m) {
      for (long nn = 0; nn <= 3; ++nn) {
        const auto poly = conjugate_pair_product(p.a, static_cast<std::size_t>(m)) *
                          conjugate_pair_product(p.b, static_cast<std::size_t>(nn));
        const Rational expected = pochhammer(p.a + p.b, m + nn) * pochhammer(p.a + p.c, m) *
                                  pochhammer(p.a + p.d, m) * pochhammer(p.b + p.c, nn) * pochhammer(p.b + p.d, nn) /
                                  pochhammer(s, m + nn);
        sub.expect_equal(functional.apply(poly), expected,
                         "mixed product at m=" + std::to_string(m) + ", n=" + std::to_string(nn));
      }
    }
    // Orthogonality of the monic Wilson polynomials.
    std::vector<UPoly<Rational>> polys;
    std::vector<Rational> norms;
    for (std::size_t nn = 0; nn <= 5; ++nn) {
      polys.push_back(wilson_poly(p, nn));
      norms.push_back(wilson_norm(p, nn));
    }
    const auto ortho = orthogonality_check(functional, polys, norms);
    if (auto bad = ortho.first_failure()) {
      sub.expect(false, "orthogonality at (" + std::to_string(bad->m) + "," + std::to_string(bad->n) +
                            "): got " + bad->value.to_string() + ", expected " + bad->expected.to_string());
    } else {
      sub.expect(true, "orthogonality");
    }
    // b_n = [y^{n-1}]W_n - [y^n]W_{n+1} = A_n + C_n - a²
    const auto j = wilson_jfrac(p, 6);
    for (std::size_t nn = 0; nn <= 4; ++nn) {
      const Rational lhs = (nn == 0 ? Rational(0) : polys[nn].coeff(nn - 1)) - polys[nn + 1].coeff(nn);
      sub.expect_equal(lhs, j.gammas[nn], "coefficient extraction for b_" + std::to_string(nn));
    }
  });
  return r;
}

}  // namespace

CheckReport wilson_egf_check(WilsonEgfVariant variant, const Rational& b, const Rational& c, const Rational& d,
                             std::size_t order) {
  CheckReport r;
  r.id = variant == WilsonEgfVariant::kAZero ? "wilson-egf-a0" : "wilson-egf-a1/2";
  const auto sin_sq = trig_arg(TrigArg::kSinHalfSquared, order);
  const Rational s = b + c + d;
  const Rational half(1, 2);
  if (variant == WilsonEgfVariant::kAZero) {
    const auto w = wilson_moments({Rational(0), b, c, d}, order / 2);
    r.expect_equal(even_egf(w, order), hyper_series<Rational>({b, c, d}, {s, half}, sin_sq),
                   "a=0 EGF vs 3F2(b,c,d; b+c+d, 1/2; sin²(t/2))");
  } else {
    const auto w = wilson_moments({half, b, c, d}, order / 2);
    const auto lhs = odd_egf(w, order);
    const auto prefactor = trig_arg(TrigArg::kTwoSinHalf, order);
    const auto rhs = prefactor * hyper_series<Rational>({b + half, c + half, d + half}, {s + half, Rational(3, 2)}, sin_sq);
    r.expect_equal(lhs, rhs, "a=1/2 EGF vs 2 sin(t/2) 3F2(b+1/2,c+1/2,d+1/2; b+c+d+1/2, 3/2; sin²(t/2))");
    // The second derivation displays denominator parameters b+c+d, 1/2 instead.
    try {
      const auto alt = prefactor * hyper_series<Rational>({b + half, c + half, d + half}, {s, half}, sin_sq);
      if (alt == lhs) {
        r.note("the alternative display (b+c+d, 1/2) also matches at this point");
      } else {
        std::size_t k = 0;
        while (alt[k] == lhs[k]) ++k;
        r.note("the alternative display (b+c+d, 1/2) disagrees from t^" + std::to_string(k) + " on");
      }
    } catch (const Error&) {
      r.note("the alternative display (b+c+d, 1/2) has a pole at this point");
    }
  }
  return r;
}

CheckReport cdh_egf_check(const Rational& a, const Rational& b, const Rational& c, std::size_t order) {
  CheckReport r;
  const Rational half(1, 2);
  const auto sin_sq = trig_arg(TrigArg::kSinHalfSquared, order);
  if (a.is_zero()) {
    r.id = "cdh-egf-a0";
    const auto mu = cdh_moments(CdhParams<Rational>{a, b, c}, order / 2);
    r.expect_equal(even_egf(mu, order), hyper_series<Rational>({b, c}, {half}, sin_sq),
                   "a=0 EGF vs 2F1(b,c; 1/2; sin²(t/2))");
  } else if (a == half) {
    r.id = "cdh-egf-a1/2";
    const auto mu = cdh_moments(CdhParams<Rational>{a, b, c}, order / 2);
    r.expect_equal(odd_egf(mu, order),
                   trig_arg(TrigArg::kTwoSinHalf, order) *
                       hyper_series<Rational>({b + half, c + half}, {Rational(3, 2)}, sin_sq),
                   "a=1/2 EGF vs 2 sin(t/2) 2F1(b+1/2, c+1/2; 3/2; sin²(t/2))");
  } else {
    throw Error(Errc::kInvalidArgument, "the continuous dual Hahn EGF is known for a = 0 or a = 1/2 only");
  }
  return r;
}

namespace {

CheckReport check_wilson_egf(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(12);
  CheckReport r = start("wilson-egf", o, true);
  const Rational half(1, 2);
  r.absorb(wilson_egf_check(WilsonEgfVariant::kAZero, 1, 1, 1, order));
  r.absorb(wilson_egf_check(WilsonEgfVariant::kAHalf, half, half, half, order));
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_wilson, [&](const WilsonParams& p, CheckReport& sub) {
    sub.absorb(wilson_egf_check(WilsonEgfVariant::kAZero, p.b, p.c, p.d, order));
    sub.absorb(wilson_egf_check(WilsonEgfVariant::kAHalf, p.b, p.c, p.d, order));
  });
  return r;
}

CheckReport check_cdh_egf(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(12);
  CheckReport r = start("cdh-egf", o, true);
  const Rational half(1, 2);
  r.absorb(cdh_egf_check(0, 1, 1, order));
  r.absorb(cdh_egf_check(half, 1, 1, order));

  // Genocchi pair: 2F1(1,1;1/2;sin²(t/2)) = sec²(t/2) 2F1(1,-1/2;1/2;-tan²(t/2)).
  const auto sin_sq = trig_arg(TrigArg::kSinHalfSquared, order);
  std::vector<Rational> g;
  for (std::size_t k = 0; 2 * k <= order; ++k) g.push_back(genocchi(static_cast<long>(2 * k + 2)));
  const auto lhs = even_egf(g, order);
  r.expect_equal(lhs, hyper_series<Rational>({1, 1}, {half}, sin_sq), "Genocchi EGF vs 2F1(1,1;1/2;sin²(t/2))");
  const auto cos_half = cos_linear(half, order);
  const auto sec = reciprocal(cos_half);
  const auto tan_half = sin_linear(half, order) * sec;
  const auto pfaff = sec * sec * hyper_series<Rational>({1, -half}, {half}, -(tan_half * tan_half));
  r.expect_equal(lhs, pfaff, "Genocchi EGF vs sec²(t/2) 2F1(1,-1/2;1/2;-tan²(t/2))");

  // cos/sin specials at a = 1/3.
  const Rational a(1, 3);
  const auto cos_special = cos_linear(a / Rational(2), order) * sec;
  r.expect_equal(cos_special,
                 hyper_series<Rational>({(Rational(1) - a) / Rational(2), (Rational(1) + a) / Rational(2)}, {half}, sin_sq),
                 "cos(at/2)/cos(t/2) at a=1/3");
  const auto num = divide_by_t(sin_linear(a / Rational(2), order + 1), 1);
  const auto den = divide_by_t(sin_linear(half, order + 1).scaled(a), 1);
  r.expect_equal(num * reciprocal(den),
                 hyper_series<Rational>({(Rational(1) - a) / Rational(2), (Rational(1) + a) / Rational(2)},
                                        {Rational(3, 2)}, sin_sq),
                 "sin(at/2)/(a sin(t/2)) at a=1/3");

  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_wilson, [&](const WilsonParams& p, CheckReport& sub) {
    sub.absorb(cdh_egf_check(0, p.b, p.c, order));
    sub.absorb(cdh_egf_check(half, p.b, p.c, order));
  });
  return r;
}

// ---------------------------------------------------------------------------
// Continuous dual Hahn and Dumont-Foata

CdhParams<MPoly> symbolic_cdh() {
  auto g = MPoly::generators({"a", "b", "c"});
  return {g[0], g[1], g[2]};
}

CheckReport check_cdh_orthogonality(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(4);
  CheckReport r = start("cdh-orthogonality", o, false);
  const auto p = symbolic_cdh();
  const MPoly &a = p.a, &b = p.b, &c = p.c;
  const auto p1 = cdh_poly(p, 1);
  r.expect_equal(p1, UPoly<MPoly>::linear(-(a * b + b * c + c * a), MPoly(1)), "p_1(y) = y - (ab+bc+ca)");
  const auto p2 = cdh_poly(p, 2);
  const MPoly y1 = -(MPoly(1) + MPoly(2) * (a + b + c) + MPoly(2) * (a * b + a * c + b * c));
  const MPoly y0 = a * a * b * b + MPoly(2) * a * a * b * c + a * a * c * c + MPoly(2) * b * b * a * c +
                   MPoly(2) * c * c * a * b + b * b * c * c + a * a * b + a * a * c + b * b * a + MPoly(4) * a * b * c +
                   a * c * c + b * b * c + b * c * c + a * b + a * c + b * c;
  r.expect_equal(p2, UPoly<MPoly>(std::vector<MPoly>{y0, y1, MPoly(1)}), "p_2(y) printed expansion");

  const auto functional = cdh_functional(p, 2 * n);
  std::vector<UPoly<MPoly>> polys;
  std::vector<MPoly> norms;
  for (std::size_t k = 0; k <= n; ++k) {
    polys.push_back(cdh_poly(p, k));
    norms.push_back(cdh_norm(p, k));
  }
  const auto ortho = orthogonality_check(functional, polys, norms);
  for (const auto& pair : ortho.pairs) {
    r.expect(pair.ok, "L(p_" + std::to_string(pair.m) + " p_" + std::to_string(pair.n) + ") = " + describe(pair.value));
  }
  // The recurrence polynomials coincide with the hypergeometric ones.
  const auto from_rec = monic_polys(cdh_jfrac(p, n).recurrence(), n);
  r.expect_equal(from_rec.back(), polys.back(), "recurrence vs hypergeometric p_" + std::to_string(n));
  return r;
}

CheckReport check_cdh_jfrac(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(8);
  CheckReport r = start("cdh-jfrac", o, false);
  const auto p = symbolic_cdh();
  const auto mu = cdh_moments(p, n);
  r.expect_equal(cf_to_series(cdh_jfrac(p, n / 2 + 1), n).coeffs(), mu, "J-fraction expansion vs recurrence");
  const auto zero = MPoly(0);
  const auto mu0 = cdh_moments(CdhParams<MPoly>{zero, p.b, p.c}, n);
  r.expect_equal(cf_to_series(cdh_a0_sfrac(p.b, p.c, n), n).coeffs(), mu0, "a=0 S-fraction expansion vs recurrence");

  // The a = 1/2 J-fraction display: gammas bc + (4n+1)(b+c)/2 + 2n², betas
  // (b+c+n)(b+n+1/2)(c+n+1/2) as printed, which omit the factor n+1.
  const MPoly half(Rational(1, 2));
  const auto jh = cdh_jfrac(CdhParams<MPoly>{half, p.b, p.c}, 4);
  for (long k = 0; k < 4; ++k) {
    const MPoly kk(k);
    const MPoly printed_gamma = p.b * p.c + MPoly(Rational(4 * k + 1, 2)) * (p.b + p.c) + MPoly(2 * k * k);
    r.expect_equal(jh.gammas[static_cast<std::size_t>(k)], printed_gamma, "a=1/2 gamma_" + std::to_string(k));
    if (k < 3) {
      const MPoly printed_beta = (p.b + p.c + kk) * (p.b + kk + half) * (p.c + kk + half);
      r.expect_equal(jh.betas[static_cast<std::size_t>(k)], MPoly(k + 1) * printed_beta,
                     "a=1/2 beta_" + std::to_string(k + 1) + " with factor n+1");
    }
  }
  r.note("the displayed a=1/2 betas lack the factor (n+1); they agree only for beta_1");
  return r;
}

CheckReport check_df_jfrac(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(6);
  CheckReport r = start("df-jfrac", o, false);
  const auto p = DumontFoataParams<MPoly>::symbolic();
  const auto gammas = dumont_foata(p, n + 1);
  r.expect_equal(gammas[0], MPoly(1), "Gamma_1 = 1");
  if (n >= 1) {
    r.expect_equal(gammas[1], p.alpha * p.beta_bar + p.beta * p.gamma_bar + p.gamma * p.alpha_bar,
                   "Gamma_2 = alpha beta_bar + beta gamma_bar + gamma alpha_bar");
  }
  r.expect_equal(cf_to_series(df_jfrac(p, n / 2 + 1), n).coeffs(), gammas, "J-fraction expansion vs recurrence");
  r.expect_equal(df_ogf(p, n).coeffs(), gammas, "sum formula vs recurrence");
  // At (1,1,1,0,1,1) the J-fraction becomes J(2·1², (1·2)², 2·2², ...).
  const DumontFoataParams<Rational> special{1, 1, 1, 0, 1, 1};
  const auto js = df_jfrac(special, 6);
  const auto jm = median_genocchi_jfrac(6);
  r.expect_equal(js.gammas, jm.gammas, "specialized gammas");
  r.expect_equal(js.betas, jm.betas, "specialized betas");
  return r;
}

}  // namespace

CheckReport df_rescaled_cdh_check(std::size_t n_max, std::uint64_t seed) {
  CheckReport r;
  r.id = "df-rescaled-cdh";
  r.seed = seed;
  const auto p = DumontFoataParams<MPoly>::symbolic();
  // (i) the explicit sum and the recurrence give the same Z_n.
  const auto zr = z_recurrence(p, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    r.expect_equal(z_explicit(p, n), zr[n], "Z_" + std::to_string(n) + " explicit sum vs recurrence");
  }
  // (ii) orthogonality against the Gamma moments, exact over the six
  // indeterminates up to degree 4 and at random points beyond that.
  const std::size_t symbolic_top = std::min<std::size_t>(n_max, 4);
  {
    const MomentFunctional<MPoly> psi{dumont_foata(p, 2 * symbolic_top + 1), "x"};
    std::vector<MPoly> norms;
    for (std::size_t n = 0; n <= symbolic_top; ++n) norms.push_back(z_norm(p, n));
    const auto ortho = orthogonality_check(
        psi, std::vector<UPoly<MPoly>>(zr.begin(), zr.begin() + static_cast<std::ptrdiff_t>(symbolic_top + 1)), norms);
    for (const auto& pair : ortho.pairs) {
      r.expect(pair.ok, "symbolic psi(Z_" + std::to_string(pair.m) + " Z_" + std::to_string(pair.n) + ")");
    }
  }
  RationalSampler rng(seed, r.id);
  for_random_points(r, rng, 5, draw_df, [&](const DumontFoataParams<Rational>& q, CheckReport& sub) {
    const MomentFunctional<Rational> psi{dumont_foata(q, 2 * n_max + 1), "x"};
    std::vector<Rational> norms;
    for (std::size_t n = 0; n <= n_max; ++n) norms.push_back(z_norm(q, n));
    const auto ortho = orthogonality_check(psi, z_recurrence(q, n_max), norms);
    for (const auto& pair : ortho.pairs) {
      sub.expect(pair.ok, "psi(Z_" + std::to_string(pair.m) + " Z_" + std::to_string(pair.n) + ") = " +
                              pair.value.to_string() + ", expected " + pair.expected.to_string());
    }
    // (iii) the Gamma moments are the shifted continuous dual Hahn moments.
    const auto s = df_to_cdh(q);
    sub.expect_equal(shift_moments(cdh_functional(s.cdh, 2 * n_max), s.d).moments, psi.moments,
                     "shifted continuous dual Hahn moments vs Gamma");
  });
  // (iii) also holds identically in the six indeterminates at low degree;
  // Gamma_6 onward takes seconds per term, so the random points cover those.
  const auto s = df_to_cdh(p);
  r.expect_equal(shift_moments(cdh_functional(s.cdh, 4), s.d).moments, dumont_foata(p, 5),
                 "symbolic shifted moments vs Gamma_1..Gamma_5");
  r.expect_equal(dumont_foata(p, 1)[0], MPoly(1), "psi(Z_0²) = Gamma_1 = 1");
  return r;
}


CheckReport hahn_sfrac_check(const HahnParams& p, std::size_t depth) {
  CheckReport r;
  r.id = "hahn-sfrac";
  const auto functional = hahn_functional(p, depth);
  const auto computed = series_to_sfrac(functional);
  const auto closed = hahn_sfrac(p, depth);
  expect_sfrac_match(r, computed, closed, "S-fraction of the moments vs closed-form alphas");
  // The derivation's alpha_{2n+1} with denominator (C+n)(C+n+1) differs from
  // the statement once n >= 2.
  for (long n = 2; 2 * n < static_cast<long>(computed.alphas.size()); ++n) {
    const Rational alt = hahn_alt_odd_alpha(p, n);
    const auto idx = static_cast<std::size_t>(2 * n);
    if (alt != computed.alphas[idx] && closed.alphas[idx] == computed.alphas[idx]) {
      r.note("alpha_" + std::to_string(2 * n + 1) + " with denominator (C+n)(C+n+1) is " + alt.to_string() +
             ", the moments give " + computed.alphas[idx].to_string() +
             "; the statement's (C+2n-1)(C+2n) is the correct one");
      break;
    }
  }
  // Auxiliary S-fraction of G and the link F(t) = G(t/(1+At))/(1+At).
  const auto g = hahn_aux_series(p, depth);
  r.expect_equal(cf_to_series(hahn_aux_sfrac(p, depth), depth), g, "S(t; C_1, C_2, ...) vs G(t)");
  const auto one_plus_at = TruncSeries<Rational>::from_poly(UPoly<Rational>::linear(1, p.A), depth);
  const auto inv = reciprocal(one_plus_at);
  const auto inner = TruncSeries<Rational>::monomial(1, Rational(1), depth) * inv;
  r.expect_equal(inv * compose(g, inner), TruncSeries<Rational>(functional.moments),
                 "F(t) = G(t/(1+At))/(1+At)");
  // With the printed sign of C_{2n} the expansion of G fails.
  SFrac<Rational> printed = hahn_aux_sfrac(p, depth);
  for (std::size_t i = 1; i < printed.alphas.size(); i += 2) printed.alphas[i] = -printed.alphas[i];
  if (depth >= 2 && cf_to_series(printed, depth) != g) {
    r.note("C_{2n} with factor (A-C-n+1) does not reproduce G; the factor is (C-A+n-1)");
  }
  return r;
}

CheckReport hahn_egf_check(const HahnParams& p, HahnEgfVariant variant, std::size_t order) {
  CheckReport r;
  const auto egf = egf_transform(TruncSeries<Rational>(hahn_moments(p, order)));
  switch (variant) {
    case HahnEgfVariant::kClosed:
      r.id = "hahn-egf-closed";
      r.expect_equal(egf, hahn_egf_closed(p, order), "sum M_n t^n/n! vs e^{-At} 2F1(A,B;C;1-e^{-t})");
      break;
    case HahnEgfVariant::kPfaff:
      r.id = "hahn-egf-pfaff";
      r.expect_equal(egf, hahn_egf_pfaff(p, order), "sum M_n t^n/n! vs 2F1(A,C-B;C;1-e^t)");
      break;
    case HahnEgfVariant::kTerminating:
      r.id = "hahn-egf-terminating";
      r.expect_equal(egf, hahn_egf_terminating(p, order), "sum M_n t^n/n! vs terminating 2F1 in e^t");
      break;
    case HahnEgfVariant::kFiniteSum:
      r.id = "hahn-finite-sum";
      r.expect_equal(hahn_finite_sum_moments(p, order), hahn_moments(p, order),
                     "N!/(alpha+beta+2)_N · L_0(x^n) vs M_n");
      break;
  }
  return r;
}

namespace {

CheckReport check_hahn_orthogonality(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(4);
  CheckReport r = start("hahn-orthogonality", o, true);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_hahn, [&](const HahnParams& p, CheckReport& sub) {
    const auto functional = hahn_functional(p, 2 * n);
    sub.expect_equal(hahn_moments_ogf(p, 2 * n), functional.moments, "Newton route vs generating-function route");
    sub.expect_equal(functional.moments[1], p.A * (p.B - p.C) / p.C, "M_1 = A(B-C)/C");
    sub.expect_equal(hahn_poly(p, 1), UPoly<Rational>::linear(1, p.C / (p.A * (p.C - p.B))), "R_1 = 1 + Cx/(A(C-B))");
    std::vector<UPoly<Rational>> polys;
    std::vector<Rational> norms;
    for (std::size_t k = 0; k <= n; ++k) {
      polys.push_back(hahn_poly(p, k));
      norms.push_back(hahn_norm(p, k));
    }
    const auto ortho = orthogonality_check(functional, polys, norms);
    for (const auto& pair : ortho.pairs) {
      sub.expect(pair.ok, "L(R_" + std::to_string(pair.m) + " R_" + std::to_string(pair.n) + ") = " +
                              pair.value.to_string() + ", expected " + pair.expected.to_string());
    }
    UPoly<Rational> rising(Rational(1));  // (x+A)_m
    UPoly<Rational> falling_neg(Rational(1));
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t k = 0; k <= n; ++k) {
        sub.expect_equal(functional.apply(polys[k] * rising), hahn_triangle_value(p, k, m),
                         "L(R_" + std::to_string(k) + " (x+A)_" + std::to_string(m) + ")");
      }
      UPoly<Rational> neg(Rational(1));  // (-x)_k
      for (std::size_t k = 0; k + m <= 2 * n; ++k) {
        sub.expect_equal(functional.apply(rising * neg), hahn_mixed_value(p, m, k),
                         "L((x+A)_" + std::to_string(m) + " (-x)_" + std::to_string(k) + ")");
        neg *= UPoly<Rational>::linear(Rational(static_cast<long>(k)), Rational(-1));
      }
      rising *= UPoly<Rational>::linear(p.A + Rational(static_cast<long>(m)), Rational(1));
    }
  });
  return r;
}

CheckReport check_hahn_bernoulli(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(12);
  CheckReport r = start("hahn-bernoulli", o, false);
  const auto b = bernoulli_numbers(static_cast<long>(std::max<std::size_t>(20, order + 2) + 1));
  const auto m112 = hahn_moments({1, 1, 2}, 20);
  for (std::size_t n = 0; n <= 20; ++n) r.expect_equal(m112[n], b[n], "M_" + std::to_string(n) + "(1,1,2) = B_n");
  const auto m123 = hahn_moments({1, 2, 3}, order);
  const auto m113 = hahn_moments({1, 1, 3}, order);
  for (std::size_t n = 0; n <= order; ++n) {
    r.expect_equal(m123[n], Rational(-2) * b[n + 1], "M_" + std::to_string(n) + "(1,2,3) = -2B_{n+1}");
    r.expect_equal(m113[n], Rational(2) * (b[n] + b[n + 1]), "M_" + std::to_string(n) + "(1,1,3) = 2(B_n+B_{n+1})");
  }
  // (e^t/6) sum M_n(2,2,4) t^n/n! = sum B_{n+2} t^n/n!
  const auto lhs = exp_linear(Rational(1), order) *
                   egf_transform(TruncSeries<Rational>(hahn_moments({2, 2, 4}, order))).scaled(Rational(1, 6));
  std::vector<Rational> shifted(b.begin() + 2, b.begin() + 2 + static_cast<std::ptrdiff_t>(order + 1));
  r.expect_equal(lhs, egf_transform(TruncSeries<Rational>(shifted)), "Krattenthaler identity at (2,2,4)");
  // e^{-t} 2F1(1,1;2;1-e^{-t}) = t/(e^t-1) = sum B_n t^n/n!
  const std::size_t egf_order = std::max<std::size_t>(order, 16);
  std::vector<Rational> bn(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(egf_order + 1));
  r.expect_equal(hahn_egf_closed({1, 1, 2}, egf_order), egf_transform(TruncSeries<Rational>(bn)),
                 "e^{-t} 2F1(1,1;2;1-e^{-t}) vs Bernoulli EGF");
  // and t/(e^t - 1) directly
  const auto expm1_over_t = divide_by_t(exp_linear(Rational(1), egf_order + 1) - TruncSeries<Rational>::constant(1, egf_order + 1), 1);
  r.expect_equal(reciprocal(expm1_over_t), egf_transform(TruncSeries<Rational>(bn)), "t/(e^t-1) vs Bernoulli EGF");
  return r;
}

CheckReport check_hahn_sfrac(const CheckOptions& o) {
  const std::size_t depth = o.depth.value_or(8);
  CheckReport r = start("hahn-sfrac", o, true);
  const HahnParams bern{1, 1, 2};
  const auto s = hahn_sfrac(bern, depth);
  r.expect_equal(std::vector<Rational>(s.alphas.begin(), s.alphas.begin() + 2),
                 std::vector<Rational>{Rational(-1, 2), Rational(1, 6)}, "alpha_1, alpha_2 at (1,1,2)");
  r.expect_equal(coeffs_of(cf_to_series(s, depth)), bernoulli_numbers(static_cast<long>(depth)),
                 "S-fraction at (1,1,2) expands to Bernoulli numbers");
  r.absorb(hahn_sfrac_check(bern, depth));
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_hahn,
                    [&](const HahnParams& p, CheckReport& sub) { sub.absorb(hahn_sfrac_check(p, depth)); });
  return r;
}

CheckReport check_hahn_egf(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(12);
  CheckReport r = start("hahn-egf", o, true);
  r.absorb(hahn_egf_check({1, 1, 2}, HahnEgfVariant::kClosed, order));
  r.absorb(hahn_egf_check({1, 1, 2}, HahnEgfVariant::kPfaff, order));
  r.absorb(hahn_egf_check({2, 7, 4}, HahnEgfVariant::kTerminating, order));
  r.absorb(hahn_egf_check({2, 7, 4}, HahnEgfVariant::kFiniteSum, order));
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 5, draw_hahn, [&](const HahnParams& p, CheckReport& sub) {
    sub.absorb(hahn_egf_check(p, HahnEgfVariant::kClosed, order));
    sub.absorb(hahn_egf_check(p, HahnEgfVariant::kPfaff, order));
  });
  // Integer N = B - C for the terminating forms.
  long big_n = 0;
  for_random_points(
      r, rng, 5,
      [&](RationalSampler& g) {
        HahnParams p{g.nonzero(), Rational(0), g.nonzero()};
        p.B = p.C + Rational(big_n % 5);
        ++big_n;
        return std::pair{p, point_text({{"A", p.A}, {"B", p.B}, {"C", p.C}})};
      },
      [&](const HahnParams& p, CheckReport& sub) {
        sub.absorb(hahn_egf_check(p, HahnEgfVariant::kTerminating, order));
        sub.absorb(hahn_egf_check(p, HahnEgfVariant::kFiniteSum, order));
      });
  return r;
}

}  // namespace

CheckReport aw_functional_checks(const AWParams& p, std::size_t m_max, std::size_t n_max) {
  CheckReport r;
  r.id = "aw-functional";
  const std::size_t top = 2 * std::max(m_max, n_max) + 2;
  const auto functional = aw_functional(p, top);
  for (std::size_t n = 0; n <= n_max; ++n) {
    r.expect_equal(functional.apply(aw_pair_product(p.a, p.q, n)), aw_linfunc_value(p, n),
                   "L((az,a/z;q)_" + std::to_string(n) + ")");
  }
  for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 3); ++n) {
    for (std::size_t m = 0; m <= std::min<std::size_t>(m_max, 3); ++m) {
      const auto poly = aw_pair_product(p.a, p.q, n) * aw_pair_product(p.b, p.q, m);
      r.expect_equal(functional.apply(poly), aw_mixed_value(p, n, m),
                     "L((az,a/z;q)_" + std::to_string(n) + " (bz,b/z;q)_" + std::to_string(m) + ")");
    }
  }
  // Shifting a to a q^n: L_{aq^n}(x^m) = L_a((az,a/z;q)_n x^m) (abcd;q)_n/(ab,ac,ad;q)_n.
  for (std::size_t n = 0; n <= std::min<std::size_t>(n_max, 3); ++n) {
    AWParams shifted = p;
    shifted.a = p.a * p.q.pow(static_cast<long>(n));
    const auto moved = aw_moments_series(shifted, 2);
    UPoly<Rational> xm = aw_pair_product(p.a, p.q, n);
    const Rational norm = aw_linfunc_value(p, n).inverse();
    for (std::size_t m = 0; m <= 2; ++m) {
      r.expect_equal(moved[m], functional.apply(xm) * norm,
                     "shift a -> aq^" + std::to_string(n) + " at x^" + std::to_string(m));
      xm *= UPoly<Rational>::x();
    }
  }
  return r;
}

CheckReport aw_orthogonality_spot(const AWParams& p, std::size_t n_max) {
  if (n_max > 4) throw Error(Errc::kInvalidArgument, "Askey-Wilson spot checks go up to degree 4");
  CheckReport r;
  r.id = "aw-orthogonality";
  const auto functional = aw_functional(p, 2 * n_max);
  std::vector<UPoly<Rational>> polys;
  for (std::size_t n = 0; n <= n_max; ++n) polys.push_back(aw_poly(p, n));
  r.expect_equal(functional.apply(polys[0] * polys[0]), Rational(1), "L(p_0²) = 1");
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      r.expect_equal(functional.apply(polys[m] * polys[n]), Rational(0),
                     "L(p_" + std::to_string(m) + " p_" + std::to_string(n) + ")");
    }
  }
  return r;
}

namespace {

CheckReport aw_routes(const AWParams& p, std::size_t n) {
  CheckReport r;
  const auto series = aw_moments_series(p, n);
  r.expect_equal(series, aw_moments_newton(p, n), "generating-function route vs Newton route");
  r.expect_equal(series[0], Rational(1), "L(1) = 1");
  if (n >= 1) {
    const Rational expected =
        (Rational(1) + p.a * p.a - (Rational(1) - p.a * p.b) * (Rational(1) - p.a * p.c) * (Rational(1) - p.a * p.d) /
                                        (Rational(1) - p.a * p.b * p.c * p.d)) /
        (Rational(2) * p.a);
    r.expect_equal(series[1], expected, "L(x) closed form");
  }
  return r;
}

CheckReport check_aw_routes(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(8);
  CheckReport r = start("aw-moment-routes", o, true);
  CheckReport fixed = aw_routes(kAWFixedPoint, n);
  fixed.id = "(q=1/2, a=1/3, b=1/5, c=1/7, d=1/11)";
  r.absorb(fixed);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_aw, [&](const AWParams& p, CheckReport& sub) { sub.absorb(aw_routes(p, n)); });
  return r;
}

CheckReport check_aw_functional(const CheckOptions& o) {
  CheckReport r = start("aw-functional", o, true);
  r.absorb(aw_functional_checks(kAWFixedPoint, 3, 6));
  AWParams degenerate = kAWFixedPoint;
  degenerate.d = Rational(0);
  CheckReport d0 = aw_functional_checks(degenerate, 3, 3);
  d0.id = "d=0";
  r.absorb(d0);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_aw,
                    [&](const AWParams& p, CheckReport& sub) { sub.absorb(aw_functional_checks(p, 3, 6)); });
  return r;
}

CheckReport check_aw_orthogonality(const CheckOptions& o) {
  const std::size_t n = o.n.value_or(3);
  CheckReport r = start("aw-orthogonality", o, true);
  r.absorb(aw_orthogonality_spot(kAWFixedPoint, n));
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_aw,
                    [&](const AWParams& p, CheckReport& sub) { sub.absorb(aw_orthogonality_spot(p, n)); });
  return r;
}

// ---------------------------------------------------------------------------
// Property suites over every family

struct NamedFunctional {
  std::string name;
  MomentFunctional<Rational> functional;
};

/// One functional per family with moments mu_0..mu_top, random points drawn
/// from `rng`.
std::vector<NamedFunctional> family_functionals(RationalSampler& rng, std::size_t top) {
  std::vector<NamedFunctional> out;
  std::vector<Rational> g, h;
  for (std::size_t k = 0; k <= top; ++k) {
    g.push_back(genocchi(static_cast<long>(2 * k + 2)));
    h.push_back(median_genocchi(static_cast<long>(k)));
  }
  out.push_back({"genocchi", {g, "x"}});
  out.push_back({"median_genocchi", {h, "x"}});
  out.push_back({"bernoulli", hahn_functional({1, 1, 2}, top)});
  out.push_back({"aw(1/2,1/3,1/5,1/7,1/11)", aw_functional(kAWFixedPoint, top)});
  auto add = [&](auto draw, auto build) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto [p, name] = draw(rng);
      try {
        out.push_back({name, build(p)});
        return;
      } catch (const Error& e) {
        if (!is_pole(e.code())) throw;
      }
    }
    throw Error(Errc::kInvalidArgument, "no pole-free random point found");
  };
  add(draw_wilson, [&](const WilsonParams& p) { return wilson_functional(p, top); });
  add(draw_hahn, [&](const HahnParams& p) { return hahn_functional(p, top); });
  add(draw_aw, [&](const AWParams& p) { return aw_functional(p, top); });
  add(
      [](RationalSampler& s) {
        CdhParams<Rational> p{s.next(), s.next(), s.next()};
        return std::pair{p, "cdh" + point_text({{"a", p.a}, {"b", p.b}, {"c", p.c}})};
      },
      [&](const CdhParams<Rational>& p) { return cdh_functional(p, top); });
  add(draw_df, [&](const DumontFoataParams<Rational>& p) {
    return MomentFunctional<Rational>{dumont_foata(p, top + 1), "x"};
  });
  return out;
}

CheckReport check_cf_roundtrip(const CheckOptions& o) {
  const std::size_t depth = o.depth.value_or(8);
  const std::size_t top = 2 * depth - 1;
  CheckReport r = start("cf-roundtrip", o, true);
  RationalSampler rng(o.seed, r.id);
  for (const auto& [name, functional] : family_functionals(rng, top)) {
    const auto j = series_to_jfrac(functional);
    r.expect(j.depth() == depth || j.terminates, name + ": J-fraction depth " + std::to_string(j.depth()));
    r.expect_equal(cf_to_series(j, top).coeffs(), functional.moments, name + ": J-fraction round trip");
  }
  // S-fraction inversions with known answers.
  std::vector<Rational> g;
  for (std::size_t k = 0; k <= depth; ++k) g.push_back(genocchi(static_cast<long>(2 * k + 2)));
  r.expect_equal(series_to_sfrac(MomentFunctional<Rational>{g, "x"}).alphas, genocchi_sfrac(depth).alphas,
                 "Genocchi moments invert to 1·1, 1·2, 2·2, ...");
  const auto jg = series_to_jfrac(MomentFunctional<Rational>{std::vector<Rational>(g.begin(), g.begin() + 6), "x"});
  r.expect_equal(jg.gammas, std::vector<Rational>{1, 6, 15}, "Genocchi gammas");
  r.expect_equal(jg.betas, std::vector<Rational>{2, 24}, "Genocchi betas");
  // Point mass: terminating fractions.
  const Rational c(3, 5);
  std::vector<Rational> powers{Rational(1)};
  for (int k = 0; k < 8; ++k) powers.push_back(powers.back() * c);
  const MomentFunctional<Rational> point{powers, "x"};
  const auto jp = series_to_jfrac(point);
  r.expect(jp.terminates && jp.gammas == std::vector<Rational>{c}, "point mass J-fraction terminates after gamma_0");
  const auto sp = series_to_sfrac(point);
  r.expect(sp.terminates && sp.alphas == std::vector<Rational>{c}, "point mass S-fraction terminates after alpha_1");
  r.expect_equal(cf_to_series(jp, 8).coeffs(), powers, "point mass round trip");
  r.expect_equal(hankel_det(point, 2), Rational(0), "rank-one Hankel determinant");
  // Hahn at (1,1,2): gamma_0 = M_1 = -1/2.
  r.expect_equal(series_to_jfrac(hahn_functional({1, 1, 2}, 3)).gammas.front(), Rational(-1, 2), "Bernoulli gamma_0");
  return r;
}

CheckReport check_contraction_coherence(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(10);
  CheckReport r = start("contraction-coherence", o, true);
  RationalSampler rng(o.seed, r.id);
  for (int trial = 0; trial < 5; ++trial) {
    SFrac<Rational> s;
    for (std::size_t i = 0; i < order + 1; ++i) s.alphas.push_back(rng.next());
    const auto direct = cf_to_series(s, order);
    const std::string tag = "trial " + std::to_string(trial);
    r.expect_equal(cf_to_series(contract(s, ContractionKind::kEven), order), direct, tag + ": even contraction");
    r.expect_equal(cf_to_series(contract(s, ContractionKind::kOdd), order), direct, tag + ": odd contraction");
  }
  SFrac<Rational> one;
  one.alphas = {Rational(7, 3)};
  const auto c1 = contract(one, ContractionKind::kEven);
  r.expect(c1.jfrac.gammas == std::vector<Rational>{Rational(7, 3)} && c1.jfrac.betas.empty(),
           "S(t; alpha_1) contracts to J(t; alpha_1)");
  return r;
}

CheckReport check_norm_product(const CheckOptions& o) {
  const std::size_t depth = o.depth.value_or(6);
  CheckReport r = start("norm-product", o, true);
  RationalSampler rng(o.seed, r.id);
  for (const auto& [name, functional] : family_functionals(rng, 2 * depth + 1)) {
    const auto j = series_to_jfrac(functional);
    const std::size_t top = std::min(depth, j.betas.size());
    const auto polys = monic_polys(j.recurrence(), top);
    Rational product = functional.moments[0];
    Rational hankel(1);
    for (std::size_t n = 0; n <= top; ++n) {
      if (n > 0) product *= j.betas[n - 1];
      r.expect_equal(functional.apply(polys[n] * polys[n]), product,
                     name + ": L(P_" + std::to_string(n) + "²) = mu_0 lambda_1···lambda_n");
      hankel *= product;  // Delta_{n+1} = prod_{k<=n} L(P_k²)
      r.expect_equal(hankel_det(functional, n + 1), hankel, name + ": Hankel determinant of order " + std::to_string(n + 1));
    }
  }
  std::vector<Rational> g;
  for (std::size_t k = 0; k <= 4; ++k) g.push_back(genocchi(static_cast<long>(2 * k + 2)));
  r.expect_equal(hankel_det(MomentFunctional<Rational>{g, "x"}, 3), Rational(96), "Genocchi Hankel determinant of order 3");
  return r;
}

CheckReport check_shift_covariance(const CheckOptions& o) {
  const std::size_t depth = o.depth.value_or(6);
  CheckReport r = start("shift-covariance", o, true);
  RationalSampler rng(o.seed, r.id);
  for (const auto& [name, functional] : family_functionals(rng, 2 * depth - 1)) {
    const Rational d = rng.nonzero();
    const auto j = series_to_jfrac(functional);
    const auto js = series_to_jfrac(shift_moments(functional, d));
    std::vector<Rational> moved;
    for (const auto& g : j.gammas) moved.push_back(g - d);
    r.expect_equal(js.gammas, moved, name + ": gammas shift by -d");
    r.expect_equal(js.betas, j.betas, name + ": betas unchanged");
    r.expect_equal(shift_moments(shift_moments(functional, d), -d).moments, functional.moments,
                   name + ": shift by d then -d");
    r.expect_equal(shift_moments(functional, Rational(0)).moments, functional.moments, name + ": shift by 0");
  }
  return r;
}

CheckReport check_remark5(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(8);
  CheckReport r = start("remark5", o, true);
  RationalSampler rng(o.seed, r.id);
  for_random_points(r, rng, 3, draw_hahn, [&](const HahnParams& p, CheckReport& sub) {
    const Rational shift = rng.nonzero();
    const auto values = hahn_basis_values(p, order);
    std::vector<Rational> nodes;
    for (std::size_t j = 0; j <= order; ++j) nodes.push_back(p.A + Rational(static_cast<long>(j)) - shift);
    sub.expect_equal(moment_ogf(values, nodes).coeffs(), shift_moments(hahn_functional(p, order), -shift).moments,
                     "L((x+T)^n) via shifted nodes vs shift_moments at T=" + shift.to_string());
  });
  return r;
}

CheckReport check_nicole(const CheckOptions& o) {
  const std::size_t m_max = o.n.value_or(5);
  CheckReport r = start("nicole", o, true);
  r.absorb(nicole_partial_sum_check<Rational>(3, Rational(1, 2), {1, 2, 3, 4}, 8));
  // Fully symbolic: x and the nodes are indeterminates.
  auto gens = MPoly::generators({"x", "a0", "a1", "a2", "a3", "a4", "a5"});
  const MPoly x = gens[0];
  const std::vector<MPoly> nodes(gens.begin() + 1, gens.end());
  for (std::size_t m = 0; m <= std::min<std::size_t>(m_max, 5); ++m) {
    CheckReport sub = nicole_partial_sum_check<MPoly>(m, x, nodes, m + 2);
    sub.id = "symbolic m=" + std::to_string(m);
    r.absorb(sub);
  }
  RationalSampler rng(o.seed, r.id);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> pts;
    for (std::size_t i = 0; i <= m_max; ++i) pts.push_back(rng.next());
    CheckReport sub = nicole_partial_sum_check<Rational>(m_max, rng.next(), pts, m_max + 4);
    sub.id = "random trial " + std::to_string(trial);
    r.absorb(sub);
  }
  // Point-mass values give x0^n.
  const Rational x0(2, 3);
  std::vector<Rational> v, nd;
  Rational basis(1);
  for (long j = 0; j <= 8; ++j) {
    v.push_back(basis);
    nd.push_back(Rational(j));
    basis *= x0 + Rational(j);
  }
  r.expect_equal(moment_ogf(v, nd), TruncSeries<Rational>::geometric(x0, 8), "point-mass basis values give x0^n");
  // Newton expansion reconstructs x^n.
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.next());
    const auto c = newton_expand(n, pts);
    UPoly<Rational> rebuilt;
    for (std::size_t k = 0; k <= n; ++k) rebuilt += newton_basis(pts, k).scaled(c[k]);
    r.expect_equal(rebuilt, UPoly<Rational>::monomial(n, 1), "Newton reconstruction of x^" + std::to_string(n));
  }
  return r;
}

CheckReport check_lemma_egf(const CheckOptions& o) {
  const std::size_t order = o.order.value_or(12);
  CheckReport r = start("lemma-egf", o, true);
  const auto expm1 = exp_linear(Rational(1), order) - TruncSeries<Rational>::constant(1, order);
  for (long m = 0; m <= 6; ++m) {
    for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(-m, 2), Rational(2, 3)}) {
      TruncSeries<Rational> den = TruncSeries<Rational>::constant(1, order);
      for (long l = 0; l <= m; ++l) {
        den *= TruncSeries<Rational>::from_poly(UPoly<Rational>::linear(1, -(alpha + Rational(l))), order);
      }
      const auto lhs = egf_transform(TruncSeries<Rational>::monomial(static_cast<std::size_t>(m), 1, order) * reciprocal(den));
      TruncSeries<Rational> rhs = exp_linear(alpha, order);
      for (long k = 0; k < m; ++k) rhs *= expm1;
      rhs = rhs.scaled(inv_factorial(m));
      r.expect_equal(lhs, rhs, "m=" + std::to_string(m) + ", alpha=" + alpha.to_string());
    }
  }
  // eps^{-1}(e^{alpha t} sum u_n t^n/n!) = sum u_n (t/(1-alpha t))^n/(1-alpha t)
  RationalSampler rng(o.seed, r.id);
  const std::size_t small = std::min<std::size_t>(order, 10);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational alpha = rng.next();
    std::vector<Rational> u;
    for (std::size_t n = 0; n <= small; ++n) u.push_back(rng.next());
    const auto lhs = egf_inverse(exp_linear(alpha, small) * egf_transform(TruncSeries<Rational>(u)));
    const auto geo = TruncSeries<Rational>::geometric(alpha, small);
    const auto inner = TruncSeries<Rational>::monomial(1, 1, small) * geo;
    r.expect_equal(lhs, geo * compose(TruncSeries<Rational>(u), inner), "reduction to alpha=0 at alpha=" + alpha.to_string());
  }
  // t^{2n}/prod_{l<=n}(1-l²t²) and t^{2n+1}/prod_{l<=n}(1-(l+1/2)²t²) give (2 sinh(t/2))^m/m!
  const auto two_sinh = exp_linear(Rational(1, 2), order) - exp_linear(Rational(-1, 2), order);
  for (long n = 0; n <= 3; ++n) {
    for (long parity = 0; parity <= 1; ++parity) {
      const long m = 2 * n + parity;
      TruncSeries<Rational> den = TruncSeries<Rational>::constant(1, order);
      for (long l = 0; l <= n; ++l) {
        if (parity == 0 && l == 0) continue;
        const Rational node = parity == 0 ? Rational(l) : Rational(2 * l + 1, 2);
        den *= TruncSeries<Rational>::from_poly(UPoly<Rational>(std::vector<Rational>{1, 0, -(node * node)}), order);
      }
      const auto lhs = egf_transform(TruncSeries<Rational>::monomial(static_cast<std::size_t>(m), 1, order) * reciprocal(den));
      TruncSeries<Rational> rhs = TruncSeries<Rational>::constant(1, order);
      for (long k = 0; k < m; ++k) rhs *= two_sinh;
      r.expect_equal(lhs, rhs.scaled(inv_factorial(m)), "(2 sinh(t/2))^" + std::to_string(m) + "/" + std::to_string(m) + "!");
    }
  }
  // exp(f) exp(-f) = 1
  for (int trial = 0; trial < 3; ++trial) {
    TruncSeries<Rational> f(order);
    for (std::size_t k = 1; k <= order; ++k) f[k] = rng.next();
    r.expect_equal(exp(f) * exp(-f), TruncSeries<Rational>::constant(1, order), "exp(f) exp(-f) = 1");
  }
  return r;
}

CheckReport check_core_properties(const CheckOptions& o) {
  CheckReport r = start("core-properties", o, true);
  RationalSampler rng(o.seed, r.id);
  const MPoly x = MPoly::generators({"x"})[0];
  for (long m = 0; m <= 10; ++m) {
    for (long n = 0; n <= 10; ++n) {
      r.expect_equal(pochhammer(x, m + n), pochhammer(x, m) * pochhammer(x + MPoly(m), n),
                     "(x)_{m+n} split at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a = rng.next();
    const Rational q = rng.nonzero();
    for (long m = 0; m <= 8; ++m) {
      for (long n = 0; n <= 8; ++n) {
        r.expect_equal(qpochhammer(a, q, m + n), qpochhammer(a, q, m) * qpochhammer(a * q.pow(m), q, n),
                       "(a;q)_{m+n} split at a=" + a.to_string() + ", q=" + q.to_string());
      }
    }
  }
  const auto g = MPoly::generators({"a", "b", "c"});
  for (int trial = 0; trial < 5; ++trial) {
    MPoly p(rng.next()), q(rng.next());
    for (int t = 0; t < 4; ++t) {
      p += g[static_cast<std::size_t>(t % 3)].pow(static_cast<unsigned>(t)) * MPoly(rng.next());
      q += g[static_cast<std::size_t>((t + 1) % 3)] * g[static_cast<std::size_t>(t % 3)] * MPoly(rng.next());
    }
    const std::vector<Rational> point{rng.next(), rng.next(), rng.next()};
    r.expect_equal((p + q).eval(point), p.eval(point) + q.eval(point), "evaluation is additive");
    r.expect_equal((p * q).eval(point), p.eval(point) * q.eval(point), "evaluation is multiplicative");
  }
  return r;
}

CheckReport check_df_rescaled(const CheckOptions& o) { return df_rescaled_cdh_check(o.n.value_or(4), o.seed); }

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = {
      {"genocchi-fourway", "G_{2n+2} by formula, S-fraction, mu_n(0,1,1) and x tan(x/2) (default n=10)",
       check_genocchi_fourway},
      {"median-genocchi-triple",
       "H_{2n+1} by the binomial sum, the S-fraction, Gamma(1,1,1,0,1,1) and shifted mu(1/2,1/2,1/2) (default n=8)",
       check_median_genocchi_triple},
      {"gandhi", "mu_n(1,1,1) = G_{2n+4} (default n=10)", check_gandhi},
      {"wilson-coherence", "Wilson moments by recurrence, J-fraction and sum formula at 5 random points (n=8)",
       check_wilson_coherence},
      {"wilson-a0-sfrac", "S-fraction of w_n(0) vs closed form at 5 random points (depth=8)", check_wilson_a0_sfrac},
      {"wilson-functional", "shifted-moment lemma, mixed products, orthogonality and b_n extraction for Wilson",
       check_wilson_functional},
      {"wilson-egf", "Wilson EGFs at a=0 and a=1/2 (order=12)", check_wilson_egf},
      {"cdh-orthogonality", "continuous dual Hahn p_1, p_2 and orthogonality, symbolic in a,b,c (n=4)",
       check_cdh_orthogonality},
      {"cdh-jfrac", "continuous dual Hahn J-fraction and a=0 S-fraction, symbolic (n=8)", check_cdh_jfrac},
      {"cdh-egf", "continuous dual Hahn EGFs, Genocchi 2F1/sec² pair and cos/sin specials (order=12)",
       check_cdh_egf},
      {"df-jfrac", "Dumont-Foata recurrence vs J-fraction vs sum formula, symbolic in six variables (n=6)",
       check_df_jfrac},
      {"df-rescaled-cdh", "rescaled continuous dual Hahn Z_n: two constructions and orthogonality (n=4)",
       check_df_rescaled},
      {"hahn-orthogonality", "Hahn R_n orthogonality, norms and triangle values at 5 random points (n=4)",
       check_hahn_orthogonality},
      {"hahn-bernoulli", "Hahn moments at (1,1,2), (1,2,3), (1,1,3) and the (2,2,4) identity", check_hahn_bernoulli},
      {"hahn-sfrac", "Hahn S-fraction closed forms vs inversion at 5 random points (depth=8)", check_hahn_sfrac},
      {"hahn-egf", "Hahn EGF: closed, Pfaff, terminating and finite-sum forms (order=12)", check_hahn_egf},
      {"aw-moment-routes", "Askey-Wilson moments by generating function and Newton expansion (n=8)",
       check_aw_routes},
      {"aw-functional", "Askey-Wilson shifted-functional identities (n<=6, m,n<=3)", check_aw_functional},
      {"aw-orthogonality", "Askey-Wilson orthogonality spot checks (n=3)", check_aw_orthogonality},
      {"cf-roundtrip", "series_to_jfrac then expansion reproduces every family's moments (depth=8)",
       check_cf_roundtrip},
      {"contraction-coherence", "even and odd contractions expand like the S-fraction (order=10)",
       check_contraction_coherence},
      {"norm-product", "L(P_n²) = mu_0 lambda_1···lambda_n and Hankel determinants (depth=6)", check_norm_product},
      {"shift-covariance", "shifting moments by d shifts gammas by -d and keeps betas (depth=6)",
       check_shift_covariance},
      {"remark5", "moments of (x+T)^n via shifted Newton nodes (order=8)", check_remark5},
      {"nicole", "partial sums of the Newton-basis expansion of 1/(1-xt) (m<=5)", check_nicole},
      {"lemma-egf", "EGF of t^m/prod(1-(alpha+l)t) and its corollaries (order=12)", check_lemma_egf},
      {"core-properties", "Pochhammer splitting and evaluation homomorphism", check_core_properties},
  };
  return registry;
}

const CheckInfo* find_check(std::string_view id) {
  for (const auto& info : check_registry()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

CheckReport run_check(std::string_view id, const CheckOptions& options) {
  const CheckInfo* info = find_check(id);
  if (!info) throw Error(Errc::kInvalidArgument, "unknown verification id '" + std::string(id) + "'");
  return info->run(options);
}

}  // namespace momentcf
