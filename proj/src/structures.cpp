#include "hopf/structures.hpp"

#include <algorithm>

#include "hopf/tensor.hpp"

namespace hopf {

Vector AlgebraStructure::multiply(const Vector& a, const Vector& b) const {
  VectorBuilder out(field(), dim());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) out.add(product(i, j), x * y);
  return out.build();
}

LinMap CoalgebraStructure::iterated(std::size_t n) const {
  std::vector<BasedSpace> legs(n + 1, carrier);
  const BasedSpace target = tensor_space(legs);
  return LinMap::from_columns(field(), carrier, target, [&](std::size_t j) {
    Tensor t = Tensor::basis(field(), {dim()}, {static_cast<std::uint32_t>(j)});
    for (std::size_t k = 0; k < n; ++k) t = t.expand(0, comult, {dim(), dim()});
    return t.flatten();
  });
}

AlgebraStructure make_algebra(const BasedSpace& carrier, LinMap mult, Vector unit) {
  const std::size_t n = carrier.dim();
  if (mult.source().dim() != n * n || mult.target().dim() != n)
    throw SpaceMismatch("multiplication table does not have shape A⊗A -> A");
  if (unit.dim() != n) throw SpaceMismatch("unit vector has the wrong dimension");
  return AlgebraStructure{carrier, std::move(mult), std::move(unit)};
}

CoalgebraStructure make_coalgebra(const BasedSpace& carrier, LinMap comult, LinMap counit) {
  const std::size_t n = carrier.dim();
  if (comult.source().dim() != n || comult.target().dim() != n * n)
    throw SpaceMismatch("comultiplication table does not have shape C -> C⊗C");
  if (counit.source().dim() != n || counit.target().dim() != 1)
    throw SpaceMismatch("counit does not have shape C -> k");
  return CoalgebraStructure{carrier, std::move(comult), std::move(counit)};
}

namespace {

std::string tuple(const BasedSpace& v, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) s += ", ";
    first = false;
    s += v.label(i);
  }
  return s + ")";
}

Vector comult_of(const CoalgebraStructure& c, std::size_t i) { return c.comult.column(i); }

}  // namespace

VerificationReport check_algebra(const AlgebraStructure& a) {
  VerificationReport rep;
  const std::size_t n = a.dim();
  const Vector& one = a.unit;

  CheckBuilder assoc("associativity", a.carrier);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.multiply(ij, Vector::unit(a.field(), n, k));
        Vector rhs = a.multiply(Vector::unit(a.field(), n, i), a.product(j, k));
        assoc.record([&] { return tuple(a.carrier, {i, j, k}); }, lhs, rhs);
      }
    }
  rep.add(assoc.done());

  CheckBuilder left("left_unit", a.carrier), right("right_unit", a.carrier);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = Vector::unit(a.field(), n, i);
    left.record([&] { return a.carrier.label(i); }, a.multiply(one, e), e);
    right.record([&] { return a.carrier.label(i); }, a.multiply(e, one), e);
  }
  rep.add(left.done());
  rep.add(right.done());
  return rep;
}

VerificationReport check_coalgebra(const CoalgebraStructure& c) {
  VerificationReport rep;
  const std::size_t n = c.dim();
  const BasedSpace ccc = tensor_space({c.carrier, c.carrier, c.carrier});

  CheckBuilder coassoc("coassociativity", ccc);
  CheckBuilder left("left_counit", c.carrier), right("right_counit", c.carrier);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor t = Tensor::from_vector(comult_of(c, i), {n, n});
    coassoc.record([&] { return c.carrier.label(i); }, t.expand(0, c.comult, {n, n}).flatten(),
                   t.expand(1, c.comult, {n, n}).flatten());
    const Vector e = Vector::unit(c.field(), n, i);
    left.record([&] { return c.carrier.label(i); }, t.contract(0, c.counit).flatten(), e);
    right.record([&] { return c.carrier.label(i); }, t.contract(1, c.counit).flatten(), e);
  }
  rep.add(coassoc.done());
  rep.add(left.done());
  rep.add(right.done());
  return rep;
}

VerificationReport check_bialgebra(const AlgebraStructure& a, const CoalgebraStructure& c) {
  if (!(a.carrier == c.carrier)) throw SpaceMismatch("algebra and coalgebra live on different carriers");
  VerificationReport rep;
  rep.merge(check_algebra(a));
  rep.merge(check_coalgebra(c));

  const std::size_t n = a.dim();
  const Field k = a.field();
  const BasedSpace hh = tensor_space(a.carrier, a.carrier);
  CheckBuilder mult("comult_multiplicative", hh);
  CheckBuilder eps("counit_multiplicative", BasedSpace::ground());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = c.comult.apply(a.product(i, j));
      Tensor t = Tensor::from_vector(comult_of(c, i), {n, n}).otimes(Tensor::from_vector(comult_of(c, j), {n, n}));
      t = t.merge(0, 2, a.mult).merge(1, 2, a.mult);
      mult.record([&] { return tuple(a.carrier, {i, j}); }, lhs, t.flatten());
      const Vector el = c.counit.apply(a.product(i, j));
      const Vector er = Vector::from_entries(k, 1, {{0, c.counit_of(i) * c.counit_of(j)}});
      eps.record([&] { return tuple(a.carrier, {i, j}); }, el, er);
    }
  rep.add(mult.done());
  rep.add(eps.done());

  CheckBuilder d1("comult_unital", hh);
  d1.record([] { return std::string("1"); }, c.comult.apply(a.unit), kron(a.unit, a.unit));
  rep.add(d1.done());
  CheckBuilder e1("counit_unital", BasedSpace::ground());
  e1.record([] { return std::string("1"); }, c.counit.apply(a.unit), Vector::unit(k, 1, 0));
  rep.add(e1.done());
  return rep;
}

VerificationReport check_hopf(const HopfStructure& h) {
  VerificationReport rep = check_bialgebra(h.algebra, h.coalgebra);
  const LinMap id = LinMap::identity(h.field(), h.carrier());
  const LinMap unit = convolution_unit(h.coalgebra, h.algebra);
  CheckResult l = compare_maps("antipode_left", convolution(h.antipode, id, h.coalgebra, h.algebra), unit);
  CheckResult r = compare_maps("antipode_right", convolution(id, h.antipode, h.coalgebra, h.algebra), unit);
  rep.add(std::move(l));
  rep.add(std::move(r));
  rep.add(compare_maps("antipode_inverse_left", compose(h.antipode, h.antipode_inv), id));
  rep.add(compare_maps("antipode_inverse_right", compose(h.antipode_inv, h.antipode), id));
  return rep;
}

LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraStructure& c, const AlgebraStructure& a) {
  const std::size_t n = c.dim(), m = a.dim();
  if (f.source().dim() != n || g.source().dim() != n || f.target().dim() != m || g.target().dim() != m)
    throw SpaceMismatch("convolution: maps must both go from the coalgebra to the algebra");
  return LinMap::from_columns(a.field(), f.source(), f.target(), [&](std::size_t j) {
    Tensor t = Tensor::from_vector(c.comult.column(j), {n, n});
    t = t.apply(0, f).apply(1, g);
    return t.map_legs(0, 2, a.mult, {m}).flatten();
  });
}

LinMap convolution_unit(const CoalgebraStructure& c, const AlgebraStructure& a) {
  return LinMap::from_columns(a.field(), c.carrier, a.carrier,
                              [&](std::size_t j) { return a.unit.scaled(c.counit_of(j)); });
}

LinMap convolution_inverse(const LinMap& f, const CoalgebraStructure& c, const AlgebraStructure& a) {
  const std::size_t n = c.dim(), m = a.dim();
  const Field k = a.field();
  if (f.source().dim() != n || f.target().dim() != m)
    throw SpaceMismatch("convolution_inverse: map must go from the coalgebra to the algebra");

  // Unknown (j, b) is the coefficient of e_b in g(e_j); equation (i, b') is
  // the coefficient of e_b' in (f∗g)(e_i).
  std::vector<VectorBuilder> cols(n * m, VectorBuilder(k, n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [flat, coef] : c.comult.column(i).entries()) {
      const std::size_t left = flat / n, right = flat % n;
      const Vector& fl = f.column(left);
      for (std::size_t b = 0; b < m; ++b) {
        for (const auto& [x, fx] : fl.entries())
          for (const auto& [y, py] : a.product(x, b).entries()) cols[right * m + b].add(i * m + y, coef * fx * py);
      }
    }
  const BasedSpace unknowns = tensor_space(c.carrier, a.carrier);
  std::vector<Vector> built;
  built.reserve(cols.size());
  for (const auto& b : cols) built.push_back(b.build());
  const LinMap system(k, unknowns, unknowns, std::move(built));

  VectorBuilder rhs(k, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar e = c.counit_of(i);
    if (e.is_zero()) continue;
    for (const auto& [y, u] : a.unit.entries()) rhs.add(i * m + y, e * u);
  }
  const auto x = solve(system, rhs.build());
  if (!x) throw NotInvertible("map is not convolution invertible (no right inverse)");

  std::vector<VectorBuilder> gcols(n, VectorBuilder(k, m));
  for (const auto& [idx, v] : x->entries()) gcols[idx / m].add(idx % m, v);
  std::vector<Vector> gv;
  for (const auto& b : gcols) gv.push_back(b.build());
  LinMap g(k, f.source(), f.target(), std::move(gv));

  const LinMap unit = convolution_unit(c, a);
  if (!(convolution(f, g, c, a) == unit) || !(convolution(g, f, c, a) == unit))
    throw NotInvertible("map has a one-sided convolution inverse only");
  return g;
}

namespace {

CoalgebraStructure co_opposite(const CoalgebraStructure& c) {
  return CoalgebraStructure{c.carrier, compose(swap_map(c.field(), c.carrier, c.carrier), c.comult), c.counit};
}

AlgebraStructure opposite(const AlgebraStructure& a) {
  return AlgebraStructure{a.carrier, compose(a.mult, swap_map(a.field(), a.carrier, a.carrier)), a.unit};
}

}  // namespace

Antipode derive_antipode(const AlgebraStructure& a, const CoalgebraStructure& c) {
  const LinMap id = LinMap::identity(a.field(), a.carrier);
  LinMap s = convolution_inverse(id, c, a);
  LinMap sinv;
  try {
    sinv = convolution_inverse(id, co_opposite(c), a);
  } catch (const NotInvertible&) {
    throw NotInvertible("antipode exists but is not invertible");
  }
  if (!(compose(s, sinv) == id) || !(compose(sinv, s) == id))
    throw NotInvertible("antipode of the co-opposite is not inverse to the antipode");
  return Antipode{std::move(s), std::move(sinv)};
}

HopfStructure make_hopf(AlgebraStructure a, CoalgebraStructure c) {
  Antipode s = derive_antipode(a, c);
  return HopfStructure{std::move(a), std::move(c), std::move(s.antipode), std::move(s.antipode_inv)};
}

std::string to_string(TwistMode m) {
  switch (m) {
    case TwistMode::Op: return "op";
    case TwistMode::Cop: return "cop";
    case TwistMode::OpCop: return "op_cop";
  }
  return "?";
}

HopfStructure twist(const HopfStructure& h, TwistMode mode) {
  switch (mode) {
    case TwistMode::Op:
      return HopfStructure{opposite(h.algebra), h.coalgebra, h.antipode_inv, h.antipode};
    case TwistMode::Cop:
      return HopfStructure{h.algebra, co_opposite(h.coalgebra), h.antipode_inv, h.antipode};
    case TwistMode::OpCop:
      return HopfStructure{opposite(h.algebra), co_opposite(h.coalgebra), h.antipode, h.antipode_inv};
  }
  return h;
}

std::string dual_label(const std::string& label) {
  if (label.size() > 2 && label.ends_with("^*")) return label.substr(0, label.size() - 2);
  return label + "^*";
}

BasedSpace dual_space(const BasedSpace& v) { return relabel(v, dual_label); }

LinMap dual_map(const LinMap& f, const BasedSpace& dual_source, const BasedSpace& dual_target) {
  return transpose(f, dual_source, dual_target);
}

AlgebraStructure dualize(const CoalgebraStructure& c) {
  const BasedSpace d = dual_space(c.carrier);
  LinMap mult = transpose(c.comult, tensor_space(d, d), d);
  Vector unit = c.counit.rows().front();
  return AlgebraStructure{d, std::move(mult), std::move(unit)};
}

CoalgebraStructure dualize(const AlgebraStructure& a) {
  const BasedSpace d = dual_space(a.carrier);
  LinMap comult = transpose(a.mult, d, tensor_space(d, d));
  LinMap counit = transpose(a.unit_map(), d, BasedSpace::ground());
  return CoalgebraStructure{d, std::move(comult), std::move(counit)};
}

HopfStructure dualize(const HopfStructure& h) {
  AlgebraStructure a = dualize(h.coalgebra);
  CoalgebraStructure c = dualize(h.algebra);
  LinMap s = transpose(h.antipode, a.carrier, a.carrier);
  LinMap sinv = transpose(h.antipode_inv, a.carrier, a.carrier);
  return HopfStructure{std::move(a), std::move(c), std::move(s), std::move(sinv)};
}

// ---------------------------------------------------------------------------
// Characters

namespace {

/// Coefficients c_0..c_d (c_d = 1) of the minimal polynomial of x.
std::vector<Scalar> minimal_polynomial(const AlgebraStructure& a, const Vector& x) {
  const Field k = a.field();
  std::vector<Vector> powers{a.unit};
  EchelonForm ef(k, a.dim());
  ef.insert(a.unit);
  for (;;) {
    Vector next = a.multiply(powers.back(), x);
    if (ef.insert(next)) {
      powers.push_back(std::move(next));
      continue;
    }
    const BasedSpace cols(std::vector<std::string>([&] {
      std::vector<std::string> l;
      for (std::size_t i = 0; i < powers.size(); ++i) l.push_back("x^" + std::to_string(i));
      return l;
    }()));
    const LinMap m(k, cols, a.carrier, powers);
    const auto c = solve(m, next);
    std::vector<Scalar> poly(powers.size() + 1, Scalar::zero(k));
    for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = -c->coeff(i);
    poly.back() = Scalar::one(k);
    return poly;
  }
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n > mpz_class("1000000000000")) throw Error("character search: constant term too large to factor");
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Scalar> roots(const std::vector<Scalar>& poly, Field k) {
  std::vector<Scalar> out;
  if (k.is_prime()) {
    if (k.characteristic() > 200000) throw Error("character search: prime too large for root enumeration");
    for (std::uint64_t r = 0; r < k.characteristic(); ++r) {
      Scalar x(k, static_cast<long>(r));
      if (evaluate(poly, x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class l = 1;
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c.rational() * l));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  std::vector<mpq_class> cand;
  if (low > 0) cand.emplace_back(0);
  for (const auto& p : divisors(ints[low]))
    for (const auto& q : divisors(ints.back())) {
      cand.emplace_back(p, q);
      cand.emplace_back(-p, q);
    }
  for (auto& c : cand) c.canonicalize();
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& c : cand) {
    Scalar x(k, c);
    if (evaluate(poly, x).is_zero()) out.push_back(x);
  }
  return out;
}

bool consistent(const EchelonForm& ef) { return !ef.rows().contains(ef.dim() - 1); }

void search(const AlgebraStructure& a, const std::vector<std::vector<Scalar>>& cands, std::size_t i,
            const EchelonForm& ef, std::vector<Scalar>& values, std::vector<LinMap>& out) {
  const std::size_t n = a.dim();
  const Field k = a.field();
  if (i == n) {
    out.emplace_back(k, a.carrier, BasedSpace::ground(), [&] {
      std::vector<Vector> cols;
      for (const auto& v : values) cols.push_back(Vector::from_entries(k, 1, {{0, v}}));
      return cols;
    }());
    return;
  }
  for (const Scalar& lambda : cands[i]) {
    EchelonForm next = ef;
    next.insert(Vector::from_entries(k, n + 1, {{i, Scalar::one(k)}, {n, lambda}}));
    // δ(e_i e_j) = λ δ(e_j) for every j.
    for (std::size_t j = 0; j < n && consistent(next); ++j) {
      std::vector<Vector::Entry> row;
      for (const auto& [t, c] : a.product(i, j).entries()) row.emplace_back(t, c);
      row.emplace_back(j, -lambda);
      next.insert(Vector::from_entries(k, n + 1, std::move(row)));
    }
    if (!consistent(next)) continue;
    values[i] = lambda;
    search(a, cands, i + 1, next, values, out);
  }
}

}  // namespace

std::vector<LinMap> find_characters(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  const Field k = a.field();
  std::vector<std::vector<Scalar>> cands;
  for (std::size_t i = 0; i < n; ++i)
    cands.push_back(roots(minimal_polynomial(a, Vector::unit(k, n, i)), k));
  EchelonForm ef(k, n + 1);
  std::vector<Vector::Entry> unit_row(a.unit.entries());
  unit_row.emplace_back(n, Scalar::one(k));
  ef.insert(Vector::from_entries(k, n + 1, std::move(unit_row)));
  std::vector<Scalar> values(n, Scalar::zero(k));
  std::vector<LinMap> out;
  search(a, cands, 0, ef, values, out);
  return out;
}

std::vector<Vector> find_grouplikes(const CoalgebraStructure& c) {
  const AlgebraStructure dual = dualize(c);
  std::vector<Vector> out;
  for (const LinMap& chi : find_characters(dual)) {
    VectorBuilder v(c.field(), c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) v.add(i, chi.entry(0, i));
    out.push_back(v.build());
  }
  return out;
}

bool is_commutative(const AlgebraStructure& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!(a.product(i, j) == a.product(j, i))) return false;
  return true;
}

bool is_cocommutative(const CoalgebraStructure& c) {
  return compose(swap_map(c.field(), c.carrier, c.carrier), c.comult) == c.comult;
}

bool same_tables(const HopfStructure& a, const HopfStructure& b) {
  return a.carrier() == b.carrier() && a.mult() == b.mult() && a.unit() == b.unit() && a.comult() == b.comult() &&
         a.counit() == b.counit() && a.antipode == b.antipode && a.antipode_inv == b.antipode_inv;
}

}  // namespace hopf
