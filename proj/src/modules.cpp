#include "hopf/modules.hpp"

#include "hopf/tensor.hpp"

namespace hopf {

namespace {

std::string pair_label(const BasedSpace& a, std::size_t i, const BasedSpace& b, std::size_t j) {
  return "(" + a.label(i) + ", " + b.label(j) + ")";
}

std::string triple_label(const BasedSpace& a, std::size_t i, const BasedSpace& b, std::size_t j, std::size_t k) {
  return "(" + a.label(i) + ", " + b.label(j) + ", " + b.label(k) + ")";
}

}  // namespace

Vector ActionMap::act(const Vector& m, const Vector& h) const {
  return gamma.apply(side == Side::Right ? kron(m, h) : kron(h, m));
}

VerificationReport check_action(const ActionMap& a, const HopfStructure& h) {
  const std::size_t dm = a.module.dim(), dh = h.dim();
  const Field k = h.field();
  const std::size_t expect = dm * dh;
  if (a.gamma.source().dim() != expect || a.gamma.target().dim() != dm)
    throw SpaceMismatch("action map has the wrong shape");
  VerificationReport rep;
  CheckBuilder assoc("action_associativity", a.module);
  CheckBuilder unit("action_unital", a.module);
  for (std::size_t m = 0; m < dm; ++m) {
    const Vector em = Vector::unit(k, dm, m);
    for (std::size_t x = 0; x < dh; ++x) {
      const Vector ex = Vector::unit(k, dh, x);
      const Vector mx = a.act(em, ex);
      for (std::size_t y = 0; y < dh; ++y) {
        const Vector ey = Vector::unit(k, dh, y);
        // Right: (m·x)·y = m·(xy). Left: x·(y·m) = (xy)·m.
        Vector lhs, rhs;
        if (a.side == Side::Right) {
          lhs = a.act(mx, ey);
          rhs = a.act(em, h.algebra.product(x, y));
        } else {
          lhs = a.act(a.act(em, ey), ex);
          rhs = a.act(em, h.algebra.product(x, y));
        }
        assoc.record([&] { return triple_label(a.module, m, h.carrier(), x, y); }, lhs, rhs);
      }
    }
    unit.record([&] { return a.module.label(m); }, a.act(em, h.unit()), em);
  }
  rep.add(assoc.done());
  rep.add(unit.done());
  return rep;
}

VerificationReport check_coaction(const CoactionMap& c, const HopfStructure& h) {
  const std::size_t dm = c.comodule.dim(), dh = h.dim();
  if (c.rho.source().dim() != dm || c.rho.target().dim() != dm * dh)
    throw SpaceMismatch("coaction map has the wrong shape");
  const bool right = c.side == Side::Right;
  const BasedSpace space = right ? tensor_space({c.comodule, h.carrier(), h.carrier()})
                                 : tensor_space({h.carrier(), h.carrier(), c.comodule});
  VerificationReport rep;
  CheckBuilder coassoc("coaction_coassociativity", space);
  CheckBuilder counit("coaction_counital", c.comodule);
  for (std::size_t m = 0; m < dm; ++m) {
    const Tensor t = right ? Tensor::from_vector(c.rho.column(m), {dm, dh})
                           : Tensor::from_vector(c.rho.column(m), {dh, dm});
    Vector lhs, rhs, cu;
    if (right) {
      lhs = t.expand(0, c.rho, {dm, dh}).flatten();
      rhs = t.expand(1, h.comult(), {dh, dh}).flatten();
      cu = t.contract(1, h.counit()).flatten();
    } else {
      lhs = t.expand(1, c.rho, {dh, dm}).flatten();
      rhs = t.expand(0, h.comult(), {dh, dh}).flatten();
      cu = t.contract(0, h.counit()).flatten();
    }
    coassoc.record([&] { return c.comodule.label(m); }, lhs, rhs);
    counit.record([&] { return c.comodule.label(m); }, cu, Vector::unit(h.field(), dm, m));
  }
  rep.add(coassoc.done());
  rep.add(counit.done());
  return rep;
}

VerificationReport check_comodule_algebra(const ComoduleAlgebra& a, const HopfStructure& h) {
  if (a.coaction.side != Side::Right) throw SpaceMismatch("comodule algebras coact from the right");
  VerificationReport rep;
  rep.merge(check_algebra(a.algebra));
  rep.merge(check_coaction(a.coaction, h));
  const std::size_t n = a.algebra.dim(), dh = h.dim();
  const LinMap& rho = a.coaction.rho;
  CheckBuilder mult("coaction_multiplicative", tensor_space(a.algebra.carrier, h.carrier()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = rho.apply(a.algebra.product(i, j));
      Tensor t = Tensor::from_vector(rho.column(i), {n, dh}).otimes(Tensor::from_vector(rho.column(j), {n, dh}));
      t = t.merge(0, 2, a.algebra.mult).merge(1, 2, h.mult());
      mult.record([&] { return pair_label(a.algebra.carrier, i, a.algebra.carrier, j); }, lhs, t.flatten());
    }
  rep.add(mult.done());
  CheckBuilder unit("coaction_unital", tensor_space(a.algebra.carrier, h.carrier()));
  unit.record([] { return std::string("1"); }, rho.apply(a.algebra.unit), kron(a.algebra.unit, h.unit()));
  rep.add(unit.done());
  return rep;
}

VerificationReport check_module_coalgebra(const ModuleCoalgebra& c, const HopfStructure& h) {
  if (c.action.side != Side::Right) throw SpaceMismatch("module coalgebras are acted on from the right");
  VerificationReport rep;
  rep.merge(check_coalgebra(c.coalgebra));
  rep.merge(check_action(c.action, h));
  const std::size_t n = c.coalgebra.dim(), dh = h.dim();
  const Field k = h.field();
  CheckBuilder comult("action_comultiplicative", tensor_space(c.coalgebra.carrier, c.coalgebra.carrier));
  CheckBuilder counit("action_counital", BasedSpace::ground());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < dh; ++x) {
      const Vector ch = c.action.gamma.column(i * dh + x);
      const Vector lhs = c.coalgebra.comult.apply(ch);
      Tensor t = Tensor::from_vector(c.coalgebra.comult.column(i), {n, n})
                     .otimes(Tensor::from_vector(h.comult().column(x), {dh, dh}));
      t = t.merge(0, 2, c.action.gamma).merge(1, 2, c.action.gamma);
      comult.record([&] { return pair_label(c.coalgebra.carrier, i, h.carrier(), x); }, lhs, t.flatten());
      const Vector el = c.coalgebra.counit.apply(ch);
      const Vector er = Vector::from_entries(k, 1, {{0, c.coalgebra.counit_of(i) * h.coalgebra.counit_of(x)}});
      counit.record([&] { return pair_label(c.coalgebra.carrier, i, h.carrier(), x); }, el, er);
    }
  rep.add(comult.done());
  rep.add(counit.done());
  return rep;
}

CoactionMap trivial_coaction(const BasedSpace& m, const HopfStructure& h) {
  return CoactionMap{m, LinMap::from_columns(h.field(), m, tensor_space(m, h.carrier()), [&](std::size_t j) {
                       return kron(Vector::unit(h.field(), m.dim(), j), h.unit());
                     })};
}

ActionMap trivial_action(const BasedSpace& m, const HopfStructure& h) {
  const std::size_t dh = h.dim();
  return ActionMap{m, LinMap::from_columns(h.field(), tensor_space(m, h.carrier()), m, [&](std::size_t col) {
                     return Vector::unit(h.field(), m.dim(), col / dh).scaled(h.coalgebra.counit_of(col % dh));
                   })};
}

Subspace coinvariants(const ComoduleAlgebra& a, const HopfStructure& h) {
  const LinMap diff = a.coaction.rho - trivial_coaction(a.algebra.carrier, h).rho;
  Subspace b = kernel(diff);
  if (!b.contains(a.algebra.unit)) throw NotSubalgebra("coinvariants do not contain the unit");
  for (const auto& x : b.basis())
    for (const auto& y : b.basis())
      if (!b.contains(a.algebra.multiply(x, y))) throw NotSubalgebra("coinvariants are not closed under products");
  return b;
}

AlgebraStructure restrict_algebra(const AlgebraStructure& a, const Subspace& b) {
  const std::size_t n = b.dim();
  const BasedSpace bb = tensor_space(b.carrier(), b.carrier());
  LinMap mult = LinMap::from_columns(a.field(), bb, b.carrier(), [&](std::size_t col) {
    const Vector p = a.multiply(b.basis()[col / n], b.basis()[col % n]);
    if (!b.contains(p)) throw NotSubalgebra("subspace is not closed under products");
    return b.coordinates(p);
  });
  if (!b.contains(a.unit)) throw NotSubalgebra("subspace does not contain the unit");
  return AlgebraStructure{b.carrier(), std::move(mult), b.coordinates(a.unit)};
}

CoidealQuotient coideal_quotient(const ModuleCoalgebra& c, const HopfStructure& h) {
  const std::size_t n = c.coalgebra.dim(), dh = h.dim();
  const Field k = h.field();
  std::vector<Vector> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < dh; ++x) {
      Vector r = c.action.gamma.column(i * dh + x);
      r.axpy(-h.coalgebra.counit_of(x), Vector::unit(k, n, i));
      if (!r.is_zero()) rel.push_back(std::move(r));
    }
  QuotientSpace q = quotient(k, c.coalgebra.carrier, rel);
  const LinMap& pi = q.projection();
  const LinMap pipi = tensor_map(pi, pi);
  LinMap comult = compose({pipi, c.coalgebra.comult, q.lift()});
  LinMap counit = compose(c.coalgebra.counit, q.lift());
  CoalgebraStructure d{q.carrier(), std::move(comult), std::move(counit)};

  VerificationReport rep;
  rep.merge(check_coalgebra(d), "D");
  rep.add(compare_maps("pi_comultiplicative", compose(d.comult, pi), compose(pipi, c.coalgebra.comult)));
  rep.add(compare_maps("pi_counital", compose(d.counit, pi), c.coalgebra.counit));
  CheckBuilder inv("pi_action_invariant", q.carrier());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < dh; ++x)
      inv.record([&] { return pair_label(c.coalgebra.carrier, i, h.carrier(), x); },
                 pi.apply(c.action.gamma.column(i * dh + x)), pi.column(i).scaled(h.coalgebra.counit_of(x)));
  rep.add(inv.done());
  LinMap pi_copy = pi;
  return CoidealQuotient{std::move(q), std::move(d), std::move(pi_copy), std::move(rep)};
}

CentralizerCommutator centralizer_and_commutator(const AlgebraStructure& a, const Subspace& b) {
  const std::size_t n = a.dim();
  const Field k = a.field();
  const BasedSpace stacked = tensor_space(b.carrier(), a.carrier);
  const LinMap comm = LinMap::from_columns(k, a.carrier, stacked, [&](std::size_t j) {
    const Vector e = Vector::unit(k, n, j);
    VectorBuilder out(k, stacked.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
      Vector d = a.multiply(b.basis()[i], e) - a.multiply(e, b.basis()[i]);
      for (const auto& [y, s] : d.entries()) out.add(i * n + y, s);
    }
    return out.build();
  });
  std::vector<Vector> rel;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector e = Vector::unit(k, n, j);
    for (const auto& bb : b.basis()) {
      Vector d = a.multiply(e, bb) - a.multiply(bb, e);
      if (!d.is_zero()) rel.push_back(std::move(d));
    }
  }
  return CentralizerCommutator{kernel(comm), quotient(k, a.carrier, rel)};
}

LinMap balancing_difference(const CoalgebraStructure& c, const LinMap& pi) {
  const std::size_t n = c.dim();
  const BasedSpace cd = tensor_space(c.carrier, pi.target());
  return LinMap::from_columns(c.field(), c.carrier, cd, [&](std::size_t j) {
    const Tensor t = Tensor::from_vector(c.comult.column(j), {n, n});
    Tensor d = t.apply(1, pi);
    d -= t.apply(0, pi).permute({1, 0});
    return d.flatten();
  });
}

Subspace invariant_subspace_CD(const ModuleCoalgebra& c, const CoidealQuotient& d) {
  return kernel(balancing_difference(c.coalgebra, d.pi));
}

QuotientCD quotient_CD(const ModuleCoalgebra& c, const CoidealQuotient& d) {
  const std::size_t n = c.coalgebra.dim();
  const Field k = c.coalgebra.field();
  // Slicing the difference map at coordinate φ of D gives the W generators.
  const LinMap diff = balancing_difference(c.coalgebra, d.pi);
  const std::size_t dd = d.pi.target().dim();
  std::vector<Vector> with_pi;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<VectorBuilder> slices(dd, VectorBuilder(k, n));
    for (const auto& [idx, s] : diff.column(j).entries()) slices[idx % dd].add(idx / dd, s);
    for (const auto& sl : slices)
      if (Vector v = sl.build(); !v.is_zero()) with_pi.push_back(std::move(v));
  }
  const LinMap id = LinMap::identity(k, c.coalgebra.carrier);
  const LinMap literal = balancing_difference(c.coalgebra, id);
  std::vector<Vector> without_pi;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<VectorBuilder> slices(n, VectorBuilder(k, n));
    for (const auto& [idx, s] : literal.column(j).entries()) slices[idx % n].add(idx / n, s);
    for (const auto& sl : slices)
      if (Vector v = sl.build(); !v.is_zero()) without_pi.push_back(std::move(v));
  }
  return QuotientCD{quotient(k, c.coalgebra.carrier, with_pi), quotient(k, c.coalgebra.carrier, without_pi)};
}

}  // namespace hopf
