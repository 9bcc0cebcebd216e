#include "doctest.h"
#include "hopf/linalg.hpp"
#include "hopf/tensor.hpp"

#include <random>

using namespace hopf;

namespace {

BasedSpace named(std::size_t n, const std::string& p) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(p + std::to_string(i));
  return BasedSpace(l);
}

Vector vec(Field k, std::vector<long> xs) {
  std::vector<Vector::Entry> e;
  for (std::size_t i = 0; i < xs.size(); ++i) e.emplace_back(i, Scalar(k, xs[i]));
  return Vector::from_entries(k, xs.size(), e);
}

LinMap matrix(Field k, const BasedSpace& src, const BasedSpace& dst, std::vector<std::vector<long>> rows) {
  return LinMap::from_columns(k, src, dst, [&](std::size_t j) {
    std::vector<long> col;
    for (const auto& r : rows) col.push_back(r[j]);
    return vec(k, col);
  });
}

LinMap random_map(Field k, const BasedSpace& src, const BasedSpace& dst, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3), z(0, 2);
  return LinMap::from_columns(k, src, dst, [&](std::size_t) {
    std::vector<long> c(dst.dim());
    for (auto& x : c) x = z(rng) == 0 ? d(rng) : 0;
    return vec(k, c);
  });
}

}  // namespace

TEST_CASE("scalars normalize exactly") {
  const Field q = Field::rationals();
  CHECK(Scalar::parse(q, "6/4").str() == "3/2");
  CHECK(Scalar::parse(q, "-2/4").str() == "-1/2");
  CHECK_THROWS_AS(Scalar::parse(q, "0.5"), FieldError);
  const Field f5 = Field::prime(5);
  CHECK(Scalar::parse(f5, "7").str() == "2");
  CHECK(Scalar::parse(f5, "-1").str() == "4");
  CHECK((Scalar(f5, 3L) * Scalar(f5, 2L)).is_one());
  CHECK(Scalar::parse(f5, "1/2").str() == "3");
  CHECK_THROWS_AS(Field::prime(6), FieldError);
  CHECK_THROWS_AS(Scalar(f5, 1L) + Scalar(q, 1L), FieldError);
}

TEST_CASE("tensor spaces are row-major") {
  const BasedSpace v = named(2, "v"), w = named(3, "w");
  const BasedSpace vw = tensor_space(v, w);
  CHECK(vw.dim() == 6);
  CHECK(vw.label(4) == "(v1,w1)");
  CHECK(tensor_space(v, BasedSpace::ground()).dim() == 2);
  const BasedSpace u = named(2, "u");
  CHECK(tensor_space(tensor_space(v, w), u).dim() == tensor_space(v, tensor_space(w, u)).dim());
}

TEST_CASE("composition over F5") {
  const Field k = Field::prime(5);
  const BasedSpace l({"e"});
  const LinMap three = matrix(k, l, l, {{3}}), two = matrix(k, l, l, {{2}});
  CHECK(compose(three, two) == LinMap::identity(k, l));
  const LinMap zero(k, l, l);
  CHECK(compose(three, zero) == zero);
  CHECK_THROWS_AS(compose(three, LinMap(k, l, named(2, "x"))), SpaceMismatch);
}

TEST_CASE("tensor_map is functorial on random maps") {
  const Field q = Field::rationals();
  std::mt19937 rng(7);
  const BasedSpace a = named(3, "a"), b = named(2, "b"), c = named(2, "c"), d = named(3, "d");
  for (int trial = 0; trial < 20; ++trial) {
    const LinMap f = random_map(q, b, c, rng), f2 = random_map(q, a, b, rng);
    const LinMap g = random_map(q, c, d, rng), g2 = random_map(q, d, c, rng);
    CHECK(compose(tensor_map(f, g), tensor_map(f2, g2)) == tensor_map(compose(f, f2), compose(g, g2)));
  }
  CHECK(tensor_map(LinMap::identity(q, a), LinMap::identity(q, b)) == LinMap::identity(q, tensor_space(a, b)));
  for (const auto& col : tensor_map(LinMap::identity(q, a), LinMap(q, b, c)).columns()) CHECK(col.is_zero());
}

TEST_CASE("solve by exact elimination") {
  const Field q = Field::rationals();
  const BasedSpace two = named(2, "x");
  const LinMap m = matrix(q, two, two, {{1, 2}, {3, 4}});
  const auto x = solve(m, vec(q, {1, 1}));
  REQUIRE(x);
  CHECK(*x == vec(q, {-1, 1}));
  CHECK(solve(LinMap::identity(q, two), vec(q, {5, 7})) == vec(q, {5, 7}));
  const LinMap sing = matrix(q, two, two, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(sing, vec(q, {1, 0})));
}

TEST_CASE("kernel, image and quotient agree on rank") {
  const Field q = Field::rationals();
  const BasedSpace two = named(2, "x"), one({"y"});
  const Subspace k1 = kernel(matrix(q, two, one, {{1, 1}}));
  REQUIRE(k1.dim() == 1);
  CHECK(k1.contains(vec(q, {1, -1})));
  CHECK(kernel(LinMap::identity(q, two)).dim() == 0);
  CHECK(kernel(LinMap(q, two, one)).dim() == 2);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const BasedSpace src = named(5, "s"), dst = named(4, "t");
    const LinMap a = random_map(trial % 2 ? q : Field::prime(3), src, dst, rng);
    const Subspace ker = kernel(a);
    CHECK(ker.dim() + rank(a) == 5);
    CHECK(compose(ker.section(), ker.inclusion()) == LinMap::identity(a.field(), ker.carrier()));
    for (const auto& v : ker.basis()) CHECK(a.apply(v).is_zero());
    const QuotientSpace qs = quotient(a.field(), dst, image(a).basis());
    CHECK(qs.dim() == 4 - rank(a));
    CHECK(compose(qs.projection(), qs.lift()) == LinMap::identity(a.field(), qs.carrier()));
    for (const auto& col : a.columns()) CHECK(qs.project(col).is_zero());
  }
}

TEST_CASE("quotients") {
  const Field q = Field::rationals();
  const BasedSpace v = named(3, "e");
  CHECK(quotient(q, v, {}).dim() == 3);
  CHECK(quotient(q, v, {vec(q, {1, 0, 0}), vec(q, {0, 1, 0}), vec(q, {0, 0, 1})}).dim() == 0);
  const QuotientSpace qs = quotient(q, v, {vec(q, {1, -1, 0})});
  CHECK(qs.dim() == 2);
  CHECK(qs.project(vec(q, {1, 0, 0})) == qs.project(vec(q, {0, 1, 0})));
}

TEST_CASE("inverse of an invertible map") {
  const Field q = Field::rationals();
  const BasedSpace two = named(2, "x");
  const LinMap m = matrix(q, two, two, {{2, 1}, {1, 1}});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(compose(m, *inv) == LinMap::identity(q, two));
  CHECK_FALSE(inverse(matrix(q, two, two, {{1, 2}, {2, 4}})));
}

TEST_CASE("tensor legs") {
  const Field q = Field::rationals();
  const BasedSpace a = named(2, "a"), b = named(3, "b");
  std::mt19937 rng(3);
  const LinMap f = random_map(q, a, b, rng), g = random_map(q, b, a, rng);
  Tensor t(q, {2, 3});
  t += Tensor::basis(q, {2, 3}, {1, 2});
  t += Tensor::basis(q, {2, 3}, {0, 1}).scaled(Scalar(q, 5L));
  CHECK(t.apply(0, f).apply(1, g).flatten() == tensor_map(f, g).apply(t.flatten()));
  CHECK(t.permute({1, 0}).flatten() == swap_map(q, a, b).apply(t.flatten()));
  CHECK(Tensor::from_vector(t.flatten(), {2, 3}) == t);
}
