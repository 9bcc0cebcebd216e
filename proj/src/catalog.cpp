#include "hopf/catalog.hpp"

#include "hopf/integrals.hpp"

namespace hopf {

Scalar binomial(Field k, std::uint64_t n, std::uint64_t r) {
  if (r > n) return Scalar::zero(k);
  if (k.is_rational()) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return Scalar(k, mpq_class(b));
  }
  const std::uint64_t p = k.characteristic();
  Scalar acc = Scalar::one(k);
  while (n > 0 || r > 0) {
    const std::uint64_t nd = n % p, rd = r % p;
    if (rd > nd) return Scalar::zero(k);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), nd, rd);
    acc *= Scalar(k, mpq_class(b));
    n /= p;
    r /= p;
  }
  return acc;
}

namespace {

std::string power(const std::string& var, std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

HopfStructure group_algebra(std::size_t n, Field k) {
  if (n == 0) throw Error("group_algebra: order must be at least 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(power("g", i));
  const BasedSpace h(labels);
  const BasedSpace hh = tensor_space(h, h);
  LinMap mult = LinMap::from_columns(k, hh, h, [&](std::size_t c) { return Vector::unit(k, n, (c / n + c % n) % n); });
  LinMap comult = LinMap::from_columns(k, h, hh, [&](std::size_t i) { return Vector::unit(k, n * n, i * n + i); });
  LinMap counit = LinMap::from_columns(k, h, BasedSpace::ground(), [&](std::size_t) { return Vector::unit(k, 1, 0); });
  return make_hopf(make_algebra(h, std::move(mult), Vector::unit(k, n, 0)),
                   make_coalgebra(h, std::move(comult), std::move(counit)));
}

HopfStructure truncated_polynomial(Field k, std::size_t top, std::size_t step, const std::string& var) {
  if (step == 0 || top == 0 || top % step != 0) throw Error("truncated_polynomial: step must divide top");
  const std::size_t n = top / step;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(power(var, i * step));
  const BasedSpace h(labels);
  const BasedSpace hh = tensor_space(h, h);
  LinMap mult = LinMap::from_columns(k, hh, h, [&](std::size_t c) {
    const std::size_t e = c / n + c % n;
    return e < n ? Vector::unit(k, n, e) : Vector(k, n);
  });
  LinMap comult = LinMap::from_columns(k, h, hh, [&](std::size_t i) {
    const std::size_t deg = i * step;
    VectorBuilder out(k, n * n);
    for (std::size_t a = 0; a <= deg; ++a) {
      const Scalar c = binomial(k, deg, a);
      if (c.is_zero()) continue;
      if (a % step != 0) throw Error("truncated_polynomial: coproduct leaves the span of the chosen powers");
      out.add((a / step) * n + (deg - a) / step, c);
    }
    return out.build();
  });
  LinMap counit = LinMap::from_columns(k, h, BasedSpace::ground(),
                                       [&](std::size_t i) { return i == 0 ? Vector::unit(k, 1, 0) : Vector(k, 1); });
  return make_hopf(make_algebra(h, std::move(mult), Vector::unit(k, n, 0)),
                   make_coalgebra(h, std::move(comult), std::move(counit)));
}

HopfStructure binomial_hopf(std::uint64_t p) { return truncated_polynomial(Field::prime(p), p, 1); }

CoextensionFixture matrix_coalgebra(std::uint64_t p, std::optional<Field> field) {
  if (!is_prime(p)) throw Error("matrix_coalgebra: p must be prime");
  const Field k = field ? *field : Field::prime(p);
  HopfStructure h = group_algebra(p, k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      labels.push_back(p <= 10 ? "A" + std::to_string(i) + std::to_string(j)
                               : "A_" + std::to_string(i) + "_" + std::to_string(j));
  const BasedSpace c(labels);
  const std::size_t n = p * p;
  LinMap comult = LinMap::from_columns(k, c, tensor_space(c, c), [&](std::size_t idx) {
    const std::size_t i = idx / p, j = idx % p;
    VectorBuilder out(k, n * n);
    for (std::size_t m = 0; m < p; ++m) out.add((i * p + m) * n + (m * p + j), Scalar::one(k));
    return out.build();
  });
  LinMap counit = LinMap::from_columns(k, c, BasedSpace::ground(), [&](std::size_t idx) {
    return idx / p == idx % p ? Vector::unit(k, 1, 0) : Vector(k, 1);
  });
  LinMap gamma = LinMap::from_columns(k, tensor_space(c, h.carrier()), c, [&](std::size_t col) {
    const std::size_t idx = col / p, g = col % p;
    const std::size_t i = (idx / p + g) % p, j = (idx % p + g) % p;
    return Vector::unit(k, n, i * p + j);
  });
  LinMap f = LinMap::from_columns(k, c, h.carrier(), [&](std::size_t idx) {
    return idx / p == idx % p ? Vector::unit(k, p, idx / p) : Vector(k, p);
  });
  ModuleCoalgebra mc{make_coalgebra(c, std::move(comult), std::move(counit)), ActionMap{c, std::move(gamma)}};
  return CoextensionFixture{"matrix_coalgebra(" + std::to_string(p) + ")", std::move(h), std::move(mc), std::move(f), {}};
}

CoextensionFixture truncated_binomial(std::uint64_t p, std::size_t m) {
  if (!is_prime(p)) throw Error("truncated_binomial: p must be prime");
  if (m < 1) throw Error("truncated_binomial: m must be positive");
  const Field k = Field::prime(p);
  std::size_t top = 1;
  for (std::size_t i = 0; i < m; ++i) top *= p;
  const HopfStructure c = truncated_polynomial(k, top, 1);
  HopfStructure h = truncated_polynomial(k, top, p);
  const std::size_t n = top, dh = top / p;
  LinMap gamma = LinMap::from_columns(k, tensor_space(c.carrier(), h.carrier()), c.carrier(), [&](std::size_t col) {
    const std::size_t e = col / dh + (col % dh) * p;
    return e < n ? Vector::unit(k, n, e) : Vector(k, n);
  });
  LinMap f = LinMap::from_columns(k, c.carrier(), h.carrier(), [&](std::size_t i) {
    return i % p == 0 ? Vector::unit(k, dh, i / p) : Vector(k, dh);
  });
  ModuleCoalgebra mc{c.coalgebra, ActionMap{c.carrier(), std::move(gamma)}};
  return CoextensionFixture{"truncated_binomial(" + std::to_string(p) + "," + std::to_string(m) + ")", std::move(h),
                            std::move(mc), std::move(f), {}};
}

CoextensionFixture two_variable(std::uint64_t p, std::size_t q) {
  if (!is_prime(p)) throw Error("two_variable: p must be prime");
  if (q < 1) throw Error("two_variable: q must be positive");
  const Field k = Field::prime(p);
  HopfStructure h = binomial_hopf(p);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      std::string l;
      if (a > 0) l = power("t", a);
      if (b > 0) l += (l.empty() ? "" : "*") + power("s", b);
      labels.push_back(l.empty() ? "1" : l);
    }
  const BasedSpace c(labels);
  const std::size_t n = p * q;
  LinMap comult = LinMap::from_columns(k, c, tensor_space(c, c), [&](std::size_t idx) {
    const std::size_t a = idx / q, b = idx % q;
    VectorBuilder out(k, n * n);
    for (std::size_t i = 0; i <= a; ++i) out.add((i * q + b) * n + ((a - i) * q + b), binomial(k, a, i));
    return out.build();
  });
  LinMap counit = LinMap::from_columns(k, c, BasedSpace::ground(),
                                       [&](std::size_t idx) { return idx / q == 0 ? Vector::unit(k, 1, 0) : Vector(k, 1); });
  LinMap gamma = LinMap::from_columns(k, tensor_space(c, h.carrier()), c, [&](std::size_t col) {
    const std::size_t idx = col / p, e = col % p;
    const std::size_t a = idx / q, b = idx % q;
    if (e == 0) return Vector::unit(k, n, idx);
    if (b > 0 || a + e >= p) return Vector(k, n);
    return Vector::unit(k, n, (a + e) * q);
  });
  LinMap f = LinMap::from_columns(k, c, h.carrier(), [&](std::size_t idx) {
    return idx % q == 0 ? Vector::unit(k, p, idx / q) : Vector(k, p);
  });
  ModuleCoalgebra mc{make_coalgebra(c, std::move(comult), std::move(counit)), ActionMap{c, std::move(gamma)}};
  std::vector<ExpectedDiscrepancy> expected{
      {"cointegral.counital",
       "counitality of C forces ε(s) = 1 for the grouplike s, while f(s) = 0 gives ε(f(s)) = 0"}};
  return CoextensionFixture{"two_variable(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(h),
                            std::move(mc), std::move(f), std::move(expected)};
}

CoextensionFixture self_coextension(const HopfStructure& h, const std::string& name) {
  ModuleCoalgebra mc{h.coalgebra, ActionMap{h.carrier(), h.mult()}};
  return CoextensionFixture{name, h, std::move(mc), LinMap::identity(h.field(), h.carrier()), {}};
}

ExtensionFixture self_extension(const HopfStructure& h, const std::string& name) {
  ComoduleAlgebra ca{h.algebra, CoactionMap{h.carrier(), h.comult()}};
  return ExtensionFixture{name, h, std::move(ca), LinMap::identity(h.field(), h.carrier()), {}};
}

namespace {

std::string dual_name(const std::string& name) {
  const std::string pre = "dual_of(";
  if (name.starts_with(pre) && name.ends_with(")")) return name.substr(pre.size(), name.size() - pre.size() - 1);
  return pre + name + ")";
}

std::string dual_check(const std::string& check) {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"cointegral.counital", "integral.unital"},
      {"cointegral.module_map", "integral.comodule_map"},
      {"cointegral.coalgebra_map", "integral.algebra_map"},
      {"cointegral.comultiplicative", "integral.multiplicative"},
  };
  for (const auto& [a, b] : pairs) {
    if (check == a) return b;
    if (check == b) return a;
  }
  return check;
}

std::vector<ExpectedDiscrepancy> dual_expected(const std::vector<ExpectedDiscrepancy>& e) {
  std::vector<ExpectedDiscrepancy> out;
  for (const auto& d : e) out.push_back({dual_check(d.check), "dual of: " + d.note});
  return out;
}

}  // namespace

ExtensionFixture dual_fixture(const CoextensionFixture& c) {
  HopfStructure h = dualize(c.hopf);
  AlgebraStructure a = dualize(c.coalgebra.coalgebra);
  LinMap rho = transpose(c.coalgebra.action.gamma, a.carrier, tensor_space(a.carrier, h.carrier()));
  std::optional<LinMap> f;
  if (c.cointegral) f = transpose(*c.cointegral, h.carrier(), a.carrier);
  ComoduleAlgebra ca{a, CoactionMap{a.carrier, std::move(rho)}};
  return ExtensionFixture{dual_name(c.name), std::move(h), std::move(ca), std::move(f), dual_expected(c.expected)};
}

CoextensionFixture dual_fixture(const ExtensionFixture& a) {
  HopfStructure h = dualize(a.hopf);
  CoalgebraStructure c = dualize(a.algebra.algebra);
  LinMap gamma = transpose(a.algebra.coaction.rho, tensor_space(c.carrier, h.carrier()), c.carrier);
  std::optional<LinMap> f;
  if (a.integral) f = transpose(*a.integral, c.carrier, h.carrier());
  ModuleCoalgebra mc{c, ActionMap{c.carrier, std::move(gamma)}};
  return CoextensionFixture{dual_name(a.name), std::move(h), std::move(mc), std::move(f), dual_expected(a.expected)};
}

VerificationReport check_fixture(const CoextensionFixture& c) {
  VerificationReport rep;
  rep.merge(check_hopf(c.hopf), "hopf");
  rep.merge(check_module_coalgebra(c.coalgebra, c.hopf), "module_coalgebra");
  if (c.cointegral)
    rep.merge(check_total_cointegral(*c.cointegral, c.coalgebra, c.hopf).record, "cointegral");
  return rep;
}

VerificationReport check_fixture(const ExtensionFixture& a) {
  VerificationReport rep;
  rep.merge(check_hopf(a.hopf), "hopf");
  rep.merge(check_comodule_algebra(a.algebra, a.hopf), "comodule_algebra");
  if (a.integral) rep.merge(check_total_integral(*a.integral, a.algebra, a.hopf).record, "integral");
  return rep;
}

}  // namespace hopf
