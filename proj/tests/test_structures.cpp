#include "doctest.h"
#include "hopf/catalog.hpp"

using namespace hopf;

namespace {

Vector e(const HopfStructure& h, std::size_t i) { return Vector::unit(h.field(), h.dim(), i); }

HopfStructure trivial(Field k) { return group_algebra(1, k); }

}  // namespace

TEST_CASE("group algebra axioms") {
  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const HopfStructure h = group_algebra(n, Field::rationals());
    CHECK(check_hopf(h).ok());
    CHECK(is_commutative(h.algebra));
    CHECK(is_cocommutative(h.coalgebra));
  }
  CHECK(check_hopf(trivial(Field::prime(7))).ok());
}

TEST_CASE("corrupted multiplication produces an associativity witness") {
  HopfStructure h = group_algebra(3, Field::rationals());
  LinMap m = h.algebra.mult;
  // g·g := g instead of g^2
  m.set_column(1 * 3 + 1, Vector::unit(h.field(), 3, 1));
  AlgebraStructure bad{h.carrier(), m, h.unit()};
  const VerificationReport r = check_algebra(bad);
  CHECK_FALSE(r.ok());
  const CheckResult* assoc = r.find("associativity");
  REQUIRE(assoc);
  CHECK_FALSE(assoc->passed);
  REQUIRE(assoc->witness);
  CHECK(assoc->witness->lhs != assoc->witness->rhs);
}

TEST_CASE("antipode of k[Z/n] inverts group elements") {
  for (std::size_t n : {1u, 2u, 3u, 5u, 6u}) {
    const HopfStructure h = group_algebra(n, Field::rationals());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h.antipode.column(i) == e(h, (n - i) % n));
      CHECK(h.antipode_inv.column(i) == e(h, (n - i) % n));
    }
    CHECK(convolution(LinMap::identity(h.field(), h.carrier()), h.antipode, h.coalgebra, h.algebra) ==
          convolution_unit(h.coalgebra, h.algebra));
  }
}

TEST_CASE("antipode of the truncated binomial Hopf algebra") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const HopfStructure h = binomial_hopf(p);
    CHECK(check_hopf(h).ok());
    const Field k = h.field();
    for (std::size_t n = 0; n < p; ++n) CHECK(h.antipode.column(n) == e(h, n).scaled(Scalar(k, n % 2 ? -1L : 1L)));
    // S(x^n) = -Σ_{i<n} C(n,i) S(x^i) x^{n-i}, by induction on n.
    std::vector<Vector> s{e(h, 0)};
    for (std::size_t n = 1; n < p; ++n) {
      Vector acc(k, p);
      for (std::size_t i = 0; i < n; ++i) acc.axpy(binomial(k, n, i), h.algebra.multiply(s[i], e(h, n - i)));
      s.push_back(acc.scaled(Scalar(k, -1L)));
      CHECK(s[n] == h.antipode.column(n));
    }
  }
}

TEST_CASE("convolution basics") {
  const HopfStructure h = group_algebra(5, Field::rationals());
  const LinMap id = LinMap::identity(h.field(), h.carrier());
  const LinMap u = convolution_unit(h.coalgebra, h.algebra);
  CHECK(convolution(id, u, h.coalgebra, h.algebra) == id);
  CHECK(convolution(id, id, h.coalgebra, h.algebra).column(1) == e(h, 2));
  CHECK(convolution_inverse(u, h.coalgebra, h.algebra) == u);
  CHECK(convolution_inverse(id, h.coalgebra, h.algebra) == h.antipode);
  // Killing the grouplike g makes f non-invertible.
  LinMap f = id;
  f.set_column(1, Vector(h.field(), 5));
  CHECK_THROWS_AS(convolution_inverse(f, h.coalgebra, h.algebra), NotInvertible);
}

TEST_CASE("non-Hopf bialgebra has no antipode") {
  // k[N]/(x^2 = x) style monoid {1, z} with z·z = z, both grouplike.
  const Field q = Field::rationals();
  const BasedSpace b({"1", "z"});
  const LinMap mult = LinMap::from_columns(q, tensor_space(b, b), b, [&](std::size_t c) {
    return Vector::unit(q, 2, c == 0 ? 0 : 1);
  });
  const LinMap comult = LinMap::from_columns(q, b, tensor_space(b, b), [&](std::size_t c) {
    return Vector::unit(q, 4, c * 2 + c);
  });
  const LinMap counit = LinMap::from_columns(q, b, BasedSpace::ground(), [&](std::size_t) { return Vector::unit(q, 1, 0); });
  const AlgebraStructure a = make_algebra(b, mult, Vector::unit(q, 2, 0));
  const CoalgebraStructure c = make_coalgebra(b, comult, counit);
  CHECK(check_bialgebra(a, c).ok());
  CHECK_THROWS_AS(derive_antipode(a, c), NotInvertible);
}

TEST_CASE("twists") {
  const HopfStructure g = group_algebra(3, Field::prime(3));
  CHECK(same_tables(twist(g, TwistMode::Cop), g));
  const HopfStructure b = binomial_hopf(5);
  CHECK(same_tables(twist(b, TwistMode::Cop), b));
  CHECK(same_tables(twist(twist(b, TwistMode::OpCop), TwistMode::OpCop), b));
  for (const auto& h : {g, b, dualize(matrix_coalgebra(3).hopf)})
    for (TwistMode m : {TwistMode::Op, TwistMode::Cop, TwistMode::OpCop}) CHECK(check_hopf(twist(h, m)).ok());
}

TEST_CASE("dual of a group algebra is the function algebra") {
  const std::size_t p = 3;
  const HopfStructure h = group_algebra(p, Field::rationals());
  const HopfStructure d = dualize(h);
  CHECK(check_hopf(d).ok());
  CHECK(d.carrier().label(1) == "g^*");
  // indicator functions: δ_i δ_j = δ_ij δ_i, unit Σ δ_i
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) CHECK(d.algebra.product(i, j) == (i == j ? e(d, i) : Vector(d.field(), p)));
  Vector one(d.field(), p);
  for (std::size_t i = 0; i < p; ++i) one += e(d, i);
  CHECK(d.unit() == one);
  CHECK(same_tables(dualize(d), h));
}

TEST_CASE("dual of the matrix coalgebra is the matrix algebra") {
  const std::size_t p = 3;
  const CoextensionFixture fx = matrix_coalgebra(p, Field::rationals());
  const AlgebraStructure m = dualize(fx.coalgebra.coalgebra);
  CHECK(check_algebra(m).ok());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) {
          const Vector expect = j == k ? Vector::unit(m.field(), p * p, i * p + l) : Vector(m.field(), p * p);
          CHECK(m.product(i * p + j, k * p + l) == expect);
        }
}

TEST_CASE("characters and grouplikes") {
  const HopfStructure g = group_algebra(5, Field::rationals());
  CHECK(find_grouplikes(g.coalgebra).size() == 5);
  const auto chars = find_characters(g.algebra);
  REQUIRE(chars.size() == 1);
  CHECK(chars[0] == g.counit());
  // over F_11 the 5th roots of unity exist
  CHECK(find_characters(group_algebra(5, Field::prime(11)).algebra).size() == 5);
  const HopfStructure b = binomial_hopf(3);
  REQUIRE(find_characters(b.algebra).size() == 1);
  CHECK(find_characters(b.algebra)[0] == b.counit());
  REQUIRE(find_grouplikes(b.coalgebra).size() == 1);
  CHECK(find_grouplikes(b.coalgebra)[0] == e(b, 0));
}
