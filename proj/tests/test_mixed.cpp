#include "doctest.h"
#include "hopf/catalog.hpp"
#include "hopf/galois.hpp"
#include "hopf/mixed.hpp"
#include "hopf/tensor.hpp"

using namespace hopf;

namespace {

std::size_t mod(long a, std::size_t p) { return static_cast<std::size_t>(((a % long(p)) + long(p)) % long(p)); }

/// Maps a vector of H⊗C^D back into H⊗C.
Vector embed_left(const Subspace& s, const Vector& v, std::size_t dh) {
  VectorBuilder out(v.field(), s.ambient().dim() * dh);
  for (const auto& [idx, c] : v.entries())
    out.add(kron(Vector::unit(v.field(), dh, idx / s.dim()), s.basis()[idx % s.dim()]), c);
  return out.build();
}

}  // namespace

TEST_CASE("verifiers reject mismatched sides") {
  const HopfStructure h = group_algebra(2, Field::rationals());
  MixedModule m;
  m.carrier = h.carrier();
  m.action = trivial_action(h.carrier(), h);
  m.coaction = trivial_coaction(h.carrier(), h);
  m.variant = Variant::LeftRight;
  CHECK_THROWS_AS(verify_yd(m, h), VariantMismatch);
  m.variant = Variant::RightRight;
  CHECK(verify_yd(m, h).ok());
  CHECK(verify_ayd(m, h).ok());
  CHECK(verify_stability(m, h).passed);
}

TEST_CASE("self extension gives the adjoint Yetter-Drinfeld module") {
  for (const HopfStructure& h : {group_algebra(3, Field::rationals()), binomial_hopf(3),
                                 dualize(group_algebra(3, Field::prime(7)))}) {
    const ExtensionFixture fx = self_extension(h);
    const IntegralYD yd = build_yd_from_integral(fx.algebra, h, *fx.integral, false);
    CHECK(yd.module.report.ok());
    CHECK(yd.module.report.passed("yd"));
    // a·x = S(x(1)) a x(2)
    const std::size_t n = h.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < n; ++x) {
        VectorBuilder expect(h.field(), n);
        for (const auto& [idx, c] : h.comult().column(x).entries()) {
          const Vector left = h.antipode.column(idx / n);
          expect.add(h.algebra.multiply(h.algebra.multiply(left, Vector::unit(h.field(), n, a)),
                                        Vector::unit(h.field(), n, idx % n)),
                     c);
        }
        CHECK(yd.module.action.gamma.column(a * n + x) == expect.build());
      }
    // B = k, so A^B = A.
    CHECK(yd.centralizer.dim() == n);
    CHECK(yd.centralizer_action.has_value());
  }
}

TEST_CASE("matrix coalgebra: Yetter-Drinfeld and anti-Yetter-Drinfeld coactions") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const CoextensionFixture fx = matrix_coalgebra(p);
    const HopfStructure& h = fx.hopf;
    const Field k = h.field();
    const std::size_t n = p * p;
    INFO(p);

    const CointegralYD yd = build_yd_from_cointegral(fx.coalgebra, h, *fx.cointegral, false);
    CHECK(yd.module.report.ok());
    // A_ij ↦ A_ij ⊗ g^{j−i}
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        CHECK(yd.module.coaction.rho.column(i * p + j) ==
              kron(Vector::unit(k, n, i * p + j), Vector::unit(k, p, mod(long(j) - long(i), p))));
    CHECK(yd.invariant_coaction.has_value());

    const CoextensionGalois g = can_coextension(fx.coalgebra, h, fx.cointegral);
    REQUIRE(g.verdict.is_cleft);
    const MixedModule ayd = build_ayd_on_CD(fx.coalgebra, h, *fx.cointegral, true);
    CHECK(ayd.report.ok());
    CHECK(ayd.report.passed("ayd"));
    CHECK(ayd.carrier.dim() == p);
    const Subspace cd = invariant_subspace_CD(fx.coalgebra, coideal_quotient(fx.coalgebra, h));
    for (std::size_t b = 0; b < cd.dim(); ++b) {
      // Σ c_ij A_ij ↦ Σ c_ij g^{i−j} ⊗ A_ij
      VectorBuilder expect(k, n * p);
      for (const auto& [idx, c] : cd.basis()[b].entries())
        expect.add(kron(Vector::unit(k, p, mod(long(idx / p) - long(idx % p), p)), Vector::unit(k, n, idx)), c);
      CHECK(embed_left(cd, ayd.coaction.rho.column(b), p) == expect.build());

      // c(2)·f⁻¹(c(3))f(c(1)): A_ij·g^{i−j} = A_{2i−j, i}
      VectorBuilder moved(k, n);
      for (const auto& [idx, c] : cd.basis()[b].entries()) {
        const long i = long(idx / p), j = long(idx % p);
        moved.add(mod(2 * i - j, p) * p + mod(i, p), c);
      }
      CHECK(moved.build() == cd.basis()[b]);
    }
    CHECK(ayd.report.passed("stable"));
    CHECK(ayd.report.find("stable")->asserted);
  }
}

TEST_CASE("truncated binomial coactions carry the multinomial signs") {
  for (auto [p, m] : {std::pair<std::uint64_t, std::size_t>{2, 2}, {3, 2}, {2, 3}}) {
    const CoextensionFixture fx = truncated_binomial(p, m);
    const HopfStructure& h = fx.hopf;
    const Field k = h.field();
    const std::size_t n = fx.coalgebra.coalgebra.dim(), dh = h.dim();
    INFO(p, " ", m);

    const CointegralYD yd = build_yd_from_cointegral(fx.coalgebra, h, *fx.cointegral, false);
    CHECK(yd.module.report.ok());
    const CoextensionGalois g = can_coextension(fx.coalgebra, h, fx.cointegral);
    const MixedModule ayd = build_ayd_on_CD(fx.coalgebra, h, *fx.cointegral, g.verdict.is_cleft);
    CHECK(ayd.report.ok());
    REQUIRE(ayd.carrier.dim() == n);
    const Subspace cd = invariant_subspace_CD(fx.coalgebra, coideal_quotient(fx.coalgebra, h));
    for (std::size_t e = 0; e < n; ++e) {
      // Σ_{a+b+c=e, p|a, p|c} e!/(a!b!c!) (−1)^a x^b ⊗ x^{a+c}, and the mirror
      // with (−1)^c on the left leg.
      VectorBuilder yd_expect(k, n * dh), ayd_expect(k, dh * n);
      for (std::size_t a = 0; a <= e; a += p)
        for (std::size_t c = 0; a + c <= e; c += p) {
          const std::size_t b = e - a - c;
          const Scalar coef = binomial(k, e, a) * binomial(k, e - a, b);
          const Scalar sa = (a % 2 == 0) ? coef : coef * Scalar(k, -1L);
          const Scalar sc = (c % 2 == 0) ? coef : coef * Scalar(k, -1L);
          yd_expect.add(b * dh + (a + c) / p, sa);
          ayd_expect.add(((a + c) / p) * n + b, sc);
        }
      CHECK(yd.module.coaction.rho.column(e) == yd_expect.build());
      const Vector e_vec = Vector::unit(k, n, e);
      CHECK(embed_left(cd, ayd.coaction.rho.apply(cd.coordinates(e_vec)), dh) == ayd_expect.build());
    }
    CHECK(ayd.report.passed("stable"));
  }
}

TEST_CASE("dual matrix algebra: module structures on A and A_B") {
  for (std::uint64_t p : {2u, 3u}) {
    const ExtensionFixture fx = dual_fixture(matrix_coalgebra(p));
    const HopfStructure& h = fx.hopf;
    const Field k = h.field();
    const std::size_t n = p * p;
    INFO(p);
    const IntegralYD yd = build_yd_from_integral(fx.algebra, h, *fx.integral, false);
    CHECK(yd.module.report.ok());
    // e_ij·δ_n = [n ≡ j−i] e_ij
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t x = 0; x < p; ++x) {
          const Vector expect = x == mod(long(j) - long(i), p) ? Vector::unit(k, n, i * p + j) : Vector(k, n);
          CHECK(yd.module.action.gamma.column((i * p + j) * p + x) == expect);
        }

    const ExtensionGalois g = can_extension(fx.algebra, h, fx.integral);
    REQUIRE(g.verdict.is_cleft);
    const MixedModule ayd = build_ayd_on_AB(fx.algebra, h, *fx.integral, true);
    CHECK(ayd.report.ok());
    CHECK(ayd.report.passed("stable"));
    CHECK(ayd.report.find("stability_predicate") != nullptr);
  }
}

TEST_CASE("preconditions are enforced") {
  const CoextensionFixture fx = two_variable(3, 2);
  CHECK_THROWS_AS(build_yd_from_cointegral(fx.coalgebra, fx.hopf, *fx.cointegral, false), PreconditionFailed);
  CHECK_THROWS_AS(build_ayd_on_CD(fx.coalgebra, fx.hopf, *fx.cointegral, false), PreconditionFailed);
  const ExtensionFixture dx = dual_fixture(fx);
  CHECK_THROWS_AS(build_yd_from_integral(dx.algebra, dx.hopf, *dx.integral, false), PreconditionFailed);
}

TEST_CASE("modular pairs in involution") {
  // Q[Z/3]: only ε is a character, three grouplikes.
  CHECK(mpi_find(group_algebra(3, Field::rationals())).size() == 3);
  // F7[Z/3]: characters g ↦ ω^j, grouplikes g^l, pairs with ω^{jl} = 1.
  std::size_t brute = 0;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = 0; l < 3; ++l) brute += (j * l) % 3 == 0;
  CHECK(mpi_find(group_algebra(3, Field::prime(7))).size() == brute);
  CHECK(mpi_find(binomial_hopf(3)).size() == 1);

  const HopfStructure h = group_algebra(3, Field::prime(7));
  CHECK(trivial_pair(h).verified());
  // δ(σ) ≠ 1
  const std::vector<LinMap> chars = find_characters(h.algebra);
  for (const LinMap& d : chars) {
    const ModularPair mp = mpi_verify(h, d, Vector::unit(h.field(), 3, 1));
    CHECK(mp.verified() == (d == h.counit()));
    if (!mp.verified()) CHECK_FALSE(mp.report.passed("delta_of_sigma"));
  }
}

TEST_CASE("tensoring with a modular pair") {
  const HopfStructure h = group_algebra(3, Field::prime(7));
  const ExtensionFixture fx = self_extension(h);
  const IntegralYD yd = build_yd_from_integral(fx.algebra, h, *fx.integral, false);
  for (const ModularPair& mp : mpi_find(h)) {
    const MixedModule t = tensor_with_delta_k_sigma(yd.module, h, mp);
    CHECK(t.report.ok());
    CHECK(t.report.passed("ayd"));
    const CheckResult pred = integral_twisted_stability(fx.algebra, h, *fx.integral, h.antipode, mp);
    CHECK((!pred.passed || verify_stability(t, h).passed));
  }

  const CoextensionFixture cx = matrix_coalgebra(3);
  const CointegralYD cyd = build_yd_from_cointegral(cx.coalgebra, cx.hopf, *cx.cointegral, false);
  for (const ModularPair& mp : mpi_find(cx.hopf)) {
    const MixedModule t = tensor_with_delta_k_sigma(cyd.module, cx.hopf, mp);
    CHECK(t.report.ok());
    const LinMap finv = compose(cx.hopf.antipode, *cx.cointegral);
    const CheckResult pred = cointegral_twisted_stability(cx.coalgebra, cx.hopf, *cx.cointegral, finv, mp);
    CHECK((!pred.passed || verify_stability(t, cx.hopf).passed));
  }
}

TEST_CASE("twisting by a modular pair and back") {
  const ExtensionFixture fx = dual_fixture(matrix_coalgebra(3));
  const MixedModule ab = build_ayd_on_AB(fx.algebra, fx.hopf, *fx.integral, true);
  const HopfStructure k = twist(fx.hopf, TwistMode::OpCop);
  const MixedModule rl = to_op_cop(ab, fx.hopf);
  CHECK(verify_ayd(rl, k).ok());
  for (const ModularPair& mp : mpi_find(k)) {
    const MixedModule yd = staic_twist(rl, k, mp);
    CHECK(yd.report.ok());
    const MixedModule back = staic_untwist(yd, k, mp);
    CHECK(back.report.ok());
    CHECK(back.action.gamma == rl.action.gamma);
    CHECK(back.coaction.rho == rl.coaction.rho);
  }

  const CoextensionFixture cx = matrix_coalgebra(3);
  const MixedModule cd = build_ayd_on_CD(cx.coalgebra, cx.hopf, *cx.cointegral, true);
  for (const ModularPair& mp : mpi_find(cx.hopf)) {
    const MixedModule yd = staic_twist(cd, cx.hopf, mp);
    CHECK(yd.report.ok());
    CHECK(staic_untwist(yd, cx.hopf, mp).coaction.rho == cd.coaction.rho);
  }
}
