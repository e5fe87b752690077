#include "jacobi/lifts.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "jacobi/generators.hpp"
#include "jacobi/modular.hpp"
#include "jacobi/series_ops.hpp"

namespace jacobi {

namespace {

std::int64_t to_exponent(const Integer &c) {
  if (!c.fits_slong_p()) throw ValidationError("product exponent " + c.get_str() + " out of range");
  return c.get_si();
}

void require_weight0(const JacobiForm &phi, const char *what) {
  if (phi.weight2 != 0) throw ValidationError(std::string(what) + " needs a weight-0 form");
}

int character_order_for(std::int64_t e) {
  return static_cast<int>(24 / std::gcd<std::int64_t>(24, e));
}

} // namespace

AbcExponents abc_exponents(const JacobiForm &phi) {
  Integer a = 0, b = 0, c = 0;
  for (const auto &[k, f] : phi.series.row(0)) {
    a += f;
    if (k.ly > 0) b += f * k.ly;
    c += f * k.ly * k.ly;
  }
  auto frac = [](const Integer &n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  };
  // b and c carry the y-unit 1/4 once and twice.
  return {frac(a, 24), frac(b, 2 * kYDen), frac(c, 4 * kYDen * kYDen)};
}

std::int64_t exp_lift_needed_order(const JacobiForm &phi, std::int64_t qorders, std::int64_t sorders) {
  const std::int64_t t = phi.index();
  if (t <= 0 || qorders <= 0 || sorders <= 0) return 0;
  const std::int64_t mmax = (sorders - 1) / t;
  return std::max<std::int64_t>(0, (qorders - 1) * mmax);
}

SiegelSeries exp_lift(const JacobiForm &phi, std::int64_t qorders, std::int64_t sorders) {
  require_weight0(phi, "exp_lift");
  if (!phi.integral_index() || phi.index() <= 0)
    throw ValidationError("exp_lift needs a positive integral index");
  if (qorders <= 0 || sorders <= 0) throw ValidationError("exp_lift needs positive truncation orders");
  const std::int64_t t = phi.index();
  const std::int64_t need = exp_lift_needed_order(phi, qorders, sorders);
  if (kQDen * need >= phi.qprec())
    throw PrecisionError(fmt::format("exp_lift to (q^{}, s^{}) needs the form to q-order {} (qprec {}), have qprec {}",
                                     qorders, sorders, need, kQDen * (need + 1), phi.qprec()));

  const auto row0 = phi.series.row(0);
  std::int64_t pa = 0, pb = 0, pc = 0;
  for (const auto &[k, f] : row0) {
    if (k.ly % kYDen != 0) throw ValidationError("exp_lift needs integral y-exponents");
    const std::int64_t e = to_exponent(f);
    pa += e;
    if (k.ly > 0) pb += e * k.ly / 2;
    pc += e * (k.ly / kYDen) * (k.ly / kYDen) * 6;
  }

  SiegelSeries out;
  std::vector<ProductFactor<Key3>> factors;
  for (const auto &[k, f] : row0) {
    const std::int64_t e = to_exponent(f);
    if (k.ly < 0) out.y_factors[k.ly] += e;
    for (std::int64_t n = 1; n < qorders; ++n) factors.push_back({Key3::make(kQDen * n, k.ly, 0), e});
  }
  for (std::int64_t m = 1; t * m < sorders; ++m) {
    for (std::int64_t n = 0; n < qorders; ++n) {
      for (const auto &[k, f] : phi.series.row(kQDen * n * m))
        factors.push_back({Key3::make(kQDen * n, k.ly, kSDen * t * m), to_exponent(f)});
    }
  }
  Series3 body = product_expand<Key3>(factors, kQDen * qorders, kSDen * sorders);
  out.series = body.shifted(Key3::make(pa, pb, pc));
  out.weight2 = static_cast<int>(to_exponent(phi.series.coefficient(Key2{0, 0})));
  out.index_t = static_cast<int>(t);
  out.character_order = character_order_for(pa);
  return out;
}

Series3 sqeg(const JacobiForm &phi, std::int64_t pmax, std::int64_t qprec) {
  require_weight0(phi, "sqeg");
  if (pmax < 0) throw ValidationError("sqeg needs pmax >= 0");
  const std::int64_t qorders = (qprec + kQDen - 1) / kQDen;
  const std::int64_t need = std::max<std::int64_t>(0, (qorders - 1) * pmax);
  if (pmax > 0 && kQDen * need >= phi.qprec())
    throw PrecisionError(fmt::format("sqeg to p^{} and qprec {} needs the form to q-order {} (qprec {}), have qprec {}",
                                     pmax, qprec, need, kQDen * (need + 1), phi.qprec()));
  std::vector<ProductFactor<Key3>> factors;
  for (std::int64_t n = 1; n <= pmax; ++n)
    for (std::int64_t m = 0; m < qorders; ++m)
      for (const auto &[k, f] : phi.series.row(kQDen * m * n))
        factors.push_back({Key3::make(kQDen * m, k.ly, kSDen * n), -to_exponent(f)});
  return product_expand<Key3>(factors, qprec, kSDen * (pmax + 1));
}

Series2 symmetric_product_genus(const JacobiForm &phi, std::int64_t n, std::int64_t qprec) {
  if (n < 0) throw ValidationError("symmetric power must be non-negative");
  Series3 s = sqeg(phi, n, qprec);
  Series2 r(s.qprec());
  for (const auto &[k, c] : s.terms())
    if (k.ms() == kSDen * n) r.add_term(Key2{k.nq, k.ly}, c);
  return r;
}

namespace {

// ϑ(τ, c z) = q^{1/8} y^{c/2} (1 - y^{-c}) Π_{n>=1} (1 - q^n y^c)(1 - q^n y^{-c})(1 - q^n),
// with w = 4c the y-exponent of y^c.
struct ThetaPower {
  std::int64_t w = 0;
  std::int64_t ms = 0;
  std::int64_t e = 0;
};

SiegelSeries theta_eta_product(std::int64_t eta_power, const std::vector<ThetaPower> &thetas,
                               std::int64_t qprec) {
  std::int64_t nq = eta_power, ly = 0, ms = 0, q_power = eta_power;
  SiegelSeries out;
  std::vector<ProductFactor<Key3>> factors;
  for (const auto &th : thetas) {
    if (th.e == 0) continue;
    nq += 3 * th.e;
    ly += th.e * th.w / 2;
    ms += th.e * th.ms;
    q_power += th.e;
    out.y_factors[-th.w] += th.e;
    const std::int64_t orders = (qprec + kQDen - 1) / kQDen;
    for (std::int64_t n = 1; n < orders; ++n) {
      factors.push_back({Key3::make(kQDen * n, th.w, 0), th.e});
      factors.push_back({Key3::make(kQDen * n, -th.w, 0), th.e});
    }
  }
  for (auto it = out.y_factors.begin(); it != out.y_factors.end();)
    it = it->second == 0 ? out.y_factors.erase(it) : std::next(it);
  const std::int64_t orders = (qprec + kQDen - 1) / kQDen;
  if (q_power != 0)
    for (std::int64_t n = 1; n < orders; ++n) factors.push_back({Key3::make(kQDen * n, 0, 0), q_power});
  out.series = product_expand<Key3>(factors, qprec, kInf).shifted(Key3::make(nq, ly, ms));
  return out;
}

std::int64_t small(const Integer &v, const char *what) {
  if (!v.fits_slong_p()) throw ValidationError(std::string(what) + " out of range");
  return v.get_si();
}

} // namespace

SiegelSeries hodge_anomaly(const CYInvariants &inv, std::int64_t qprec) {
  const int d = inv.d;
  if (d < 1) throw ValidationError("hodge_anomaly needs d >= 1");
  auto chi_p = [&](int p) { return (p & 1) ? Integer(-inv.chi[p]) : inv.chi[p]; };
  const Integer e = inv.euler();
  const int d0 = d / 2;
  std::vector<ThetaPower> thetas;
  Integer eta2;
  if (d % 2 == 0) {
    eta2 = e - 3 * chi_p(d0);
    for (int p = 1; p <= d0; ++p)
      thetas.push_back({4 * p, 12 * p * p, small(-chi_p(d0 - p), "theta exponent")});
  } else {
    eta2 = e;
    for (int p = 1; p <= d0; ++p)
      thetas.push_back({2 * (2 * p - 1), 3 * (2 * p - 1) * (2 * p - 1), small(-chi_p(d0 - p + 1), "theta exponent")});
  }
  if (!mpz_even_p(eta2.get_mpz_t()))
    throw ValidationError("eta exponent " + eta2.get_str() + "/2 is not integral");
  const std::int64_t k = small(eta2 / 2, "eta exponent");
  SiegelSeries h = theta_eta_product(k, thetas, qprec);
  std::int64_t w2 = k;
  for (const auto &th : thetas) w2 += th.e;
  h.weight2 = static_cast<int>(w2);
  h.character_order = character_order_for(small(e % 24, "Euler number"));
  h.index_t = d % 2 == 0 ? d / 2 : 2 * d;
  return h;
}

SiegelSeries e_form(const CYInvariants &inv, std::int64_t qorders, std::int64_t sorders,
                    std::optional<Integer> xi6_coefficient) {
  if (qorders <= 0 || sorders <= 0) throw ValidationError("e_form needs positive truncation orders");
  const int d = inv.d;
  const bool odd = d % 2 == 1;
  const std::int64_t pstep = odd ? 2 * d : d / 2;
  const std::int64_t pmax = (sorders - 1) / pstep;
  const std::int64_t need = std::max<std::int64_t>(qorders - 1, (qorders - 1) * pmax);
  JacobiForm genus = elliptic_genus(inv, kQDen * (need + 1), xi6_coefficient);

  SiegelSeries h = hodge_anomaly(inv, kQDen * qorders);
  if (odd) h = substitute_zw(h, 2, 4);
  ExponentMap map{{{1, 0, 0}, {0, odd ? 2 : 1, 0}, {0, 0, pstep}}, {}};
  Series3 sq = monomial_substitute<Key3>(sqeg(genus, pmax, kQDen * qorders), map);
  SiegelSeries out = h;
  out.series = (h.series * sq).truncated(kInf, h.series.min_ms() + kSDen * sorders);
  return out;
}

namespace {

std::int64_t isqrt_exact(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

std::int64_t divisor_character_sum(std::int64_t g, std::int64_t chi_mod) {
  std::int64_t s = 0;
  for (std::int64_t a = 1; a <= g; ++a)
    if (g % a == 0) s += kronecker(chi_mod, a);
  return s;
}

} // namespace

SiegelSeries arithmetic_lift(ArithmeticLift which, std::int64_t qorders, std::int64_t sorders) {
  const bool d2 = which == ArithmeticLift::Delta2;
  const std::int64_t step = d2 ? 4 : 6;
  Series3 s(kQDen * qorders, kSDen * sorders);
  for (std::int64_t n = 1; n < step * qorders; n += step) {
    for (std::int64_t m = 1; m < 2 * sorders; m += step) {
      const std::int64_t lmax = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(4 * n * m))) + 1;
      for (std::int64_t l = -lmax; l <= lmax; ++l) {
        const std::int64_t norm = d2 ? 2 * n * m - l * l : 4 * n * m - 3 * l * l;
        if (norm <= 0) continue;
        const std::int64_t r = isqrt_exact(norm);
        if (r <= 0) continue;
        const std::int64_t g = std::gcd(std::gcd(n, m), std::abs(l));
        Integer c;
        if (d2)
          c = Integer(r) * kronecker(-4, r * l) * divisor_character_sum(g, -4);
        else
          c = Integer(kronecker(-4, l)) * kronecker(12, r) * divisor_character_sum(g, -3);
        s.add_term(Key3::make(kQDen * n / step, 2 * l, 12 * m), c);
      }
    }
  }
  SiegelSeries out(std::move(s), d2 ? 4 : 2, d2 ? 2 : 3);
  out.character_order = d2 ? 4 : 12;
  return out;
}

SiegelSeries delta_half_theta(std::int64_t qorders, std::int64_t sorders) {
  Series3 s(kQDen * qorders, kSDen * sorders);
  for (std::int64_t n = -1 - 2 * qorders; n <= 1 + 2 * qorders; n += 2) {
    if (3 * n * n >= kQDen * qorders) continue;
    for (std::int64_t m = -1 - 2 * sorders; m <= 1 + 2 * sorders; m += 2) {
      if (3 * m * m >= kSDen * sorders) continue;
      s.add_term(Key3::make(3 * n * n, n * m, 3 * m * m), Integer(kronecker(-4, n) * kronecker(-4, m)));
    }
  }
  Series3 half(s.qprec(), s.sprec());
  for (const auto &[k, c] : s.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2))
      throw IdentityError("odd coefficient in the doubled theta sum at " + key_string(k));
    half.add_term(k, Integer(c / 2));
  }
  SiegelSeries out(std::move(half), 1, 0);
  out.character_order = 8;
  return out;
}

std::optional<Substitution> delta_half_substitution(std::int64_t qorders, std::int64_t sorders) {
  JacobiForm phi = generator(Generator::Phi04, kQDen * qorders * std::max<std::int64_t>(1, sorders));
  SiegelSeries lift = exp_lift(phi, qorders, sorders);
  for (int j = 1; j <= 8; ++j) {
    for (int k = 1; k <= 8; ++k) {
      SiegelSeries th = substitute_zw(delta_half_theta(qorders, (sorders + k - 1) / k + 1), j, k);
      if (th.series.empty() || !th.agrees_with(lift)) continue;
      return Substitution{j, k};
    }
  }
  return std::nullopt;
}

SiegelSeries siegel_theta_constant(int a1, int a2, int b1, int b2, std::int64_t qorders,
                                   std::int64_t sorders) {
  for (int v : {a1, a2, b1, b2})
    if (v != 0 && v != 1) throw ValidationError("theta characteristic entries must be 0 or 1");
  if ((a1 * b1 + a2 * b2) % 2 != 0) throw ValidationError("odd theta characteristic");
  Series3 s(kQDen * qorders, kSDen * sorders);
  auto range = [](int a, std::int64_t prec) {
    std::int64_t x = a;
    while (3 * (x + 2) * (x + 2) < prec) x += 2;
    return x;
  };
  const std::int64_t x1max = range(a1, kQDen * qorders), x2max = range(a2, kSDen * sorders);
  for (std::int64_t x1 = -x1max; x1 <= x1max; x1 += 2) {
    for (std::int64_t x2 = -x2max; x2 <= x2max; x2 += 2) {
      const std::int64_t e = x1 * b1 + x2 * b2;
      s.add_term(Key3::make(3 * x1 * x1, x1 * x2, 3 * x2 * x2), Integer((e / 2) % 2 == 0 ? 1 : -1));
    }
  }
  return SiegelSeries(std::move(s), 1, 1);
}

SiegelSeries theta_product(std::int64_t qorders, std::int64_t sorders) {
  Series3 p = Series3::one();
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
          if ((a1 * b1 + a2 * b2) % 2 != 0) continue;
          Series3 th = siegel_theta_constant(a1, a2, b1, b2, qorders, sorders).series;
          p = p * th * th;
        }
  Series3 out(p.qprec(), p.sprec());
  for (const auto &[k, c] : p.terms()) {
    if (!mpz_divisible_2exp_p(c.get_mpz_t(), 12))
      throw IdentityError("theta product coefficient at " + key_string(k) + " not divisible by 2^12");
    out.add_term(k, Integer(c >> 12));
  }
  return SiegelSeries(std::move(out), 20, 1);
}

Integer humbert_multiplicity(const JacobiForm &phi, std::int64_t a, std::int64_t b) {
  if (!phi.integral_index() || phi.index() <= 0)
    throw ValidationError("humbert_multiplicity needs a positive integral index");
  const std::int64_t t = phi.index();
  const std::int64_t D = b * b - 4 * t * a;
  if (D <= 0) throw PrecisionError("discriminant " + std::to_string(D) + " gives an infinite sum");
  Integer m = 0;
  for (std::int64_t n = 1; n * n * D <= t * t; ++n) {
    const std::int64_t norm = -n * n * D;
    std::int64_t l = (n * b) % (2 * t);
    if (l > t) l -= 2 * t;
    if (l <= -t) l += 2 * t;
    const std::int64_t num = norm + l * l;
    if (num < 0) continue;
    const std::int64_t n0 = num / (4 * t);
    if (kQDen * n0 >= phi.qprec())
      throw PrecisionError("humbert_multiplicity needs the form to q-order " + std::to_string(n0));
    m -= phi.coeff(n0, 2 * l);
  }
  return m;
}

std::vector<HumbertDatum> humbert_divisor(const JacobiForm &phi) {
  const std::int64_t t = phi.index();
  std::vector<HumbertDatum> out;
  for (std::int64_t b = 0; b <= t; ++b) {
    for (std::int64_t D = 1; D <= t * t; ++D) {
      if ((b * b - D) % (4 * t) != 0) continue;
      const std::int64_t a = (b * b - D) / (4 * t);
      Integer m = humbert_multiplicity(phi, a, b);
      if (sgn(m) != 0) out.push_back({a, b, D, m});
    }
  }
  return out;
}

namespace {

using GSeries3 = Series<Key3, Gaussian>;

GSeries3 to_gaussian(const Series3 &s) {
  return convert<Gaussian>(s, [](const Integer &c) { return Gaussian(c); });
}

} // namespace

Report delta11_identity_check(std::int64_t qorders, std::int64_t sorders) {
  const std::int64_t need = kQDen * (qorders * sorders + 1);
  JacobiForm p1 = generator(Generator::Phi01, need);
  JacobiForm p2 = generator(Generator::Phi02, need);
  JacobiForm psi = p1 * p1 - p2.scaled(20);
  Report rep;

  SiegelSeries d2 = exp_lift(p2, qorders, sorders);
  Series3 d2s = d2.expanded();
  Integer lead = d2s.terms().begin()->second;
  rep.push_back({"Delta2 is unit-led", abs(lead) == 1, "leading coefficient " + lead.get_str(), 0, 0});

  SiegelSeries d5 = exp_lift(p1, qorders, sorders);
  Series3 d5s = d5.expanded();
  Series3 d5w = substitute_zw(d5, 2, 4).expanded();
  GSeries3 shifted = monomial_substitute<Key3>(to_gaussian(d5s), ExponentMap{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}},
                                               root_twist<Key3, Gaussian>(48, {0, 0, 1}));
  GSeries3 half = monomial_substitute<Key3>(GSeries3::monomial(Key3::make(0, 0, 12), Gaussian(1)),
                                            ExponentMap{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}},
                                            root_twist<Key3, Gaussian>(48, {0, 0, 1}));
  rep.push_back({"half-period shift of s^(1/2)", half.coefficient(Key3::make(0, 0, 12)) == Gaussian(0, 1),
                 "coefficient " + RingTraits<Gaussian>::to_string(half.coefficient(Key3::make(0, 0, 12))), 0, 0});

  GSeries3 rhs = to_gaussian(d5s) * to_gaussian(d5w) * shifted;
  SiegelSeries d11 = exp_lift(psi, qorders, sorders);
  GSeries3 lhs = to_gaussian(d11.expanded() * d2s * d2s);
  // The half-period shift leaves a constant unit between the two sides.
  const Gaussian unit = rhs.terms().begin()->second;
  auto diff = lhs.scaled(unit).first_difference(rhs);
  const bool is_unit = RingTraits<Gaussian>::is_unit(unit) && lhs.terms().begin()->second == Gaussian(1);
  std::string detail = diff ? "first difference at " + key_string(*diff)
                            : fmt::format("agree up to the unit {} below qprec {} sprec {}",
                                          RingTraits<Gaussian>::to_string(unit), std::min(lhs.qprec(), rhs.qprec()),
                                          std::min(lhs.sprec(), rhs.sprec()));
  rep.push_back({"Delta11 Delta2^2 = Delta5(Z) Delta5(t,2z,4w) Delta5(t,z,w+1/2)", !diff && is_unit, detail, 0, 0});
  return rep;
}

} // namespace jacobi
