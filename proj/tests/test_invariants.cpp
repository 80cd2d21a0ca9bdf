#include <doctest.h>

#include <stdexcept>

#include "modinv/groebner.hpp"
#include "modinv/invariants.hpp"

using namespace modinv;

namespace {

std::vector<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Over GF(2): the number of invariant polynomials of degree <= d, counted by
// running through every 0/1 combination of the monomials.
std::size_t count_invariants_gf2(const GAlgebra& a, unsigned d) {
  const auto mons = monomials_up_to(a.ring()->nvars(), d);
  REQUIRE(mons.size() < 20);
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << mons.size()); ++mask) {
    Polynomial f(a.ring());
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mask >> i & 1) f += Polynomial::monomial(a.ring(), mons[i]);
    if (a.is_invariant(f)) ++count;
  }
  return count;
}

GAlgebra trivial_algebra(const FieldPtr& k, const std::vector<std::string>& vars) {
  const auto r = Ring::create(k, vars);
  return GAlgebra::make(r, group_cyclic(k->p(), 1), {VarMap::identity(r)});
}

}  // namespace

TEST_CASE("brute-force invariants: examples") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto m1 = build_mho(k2, 2, 1);
  CHECK(as_strings(invariants_bruteforce(m1.base, 2).basis) == std::vector<std::string>{"1", "Y^2 + Y"});
  const auto m2 = build_mho(k2, 2, 2);
  CHECK(as_strings(invariants_bruteforce(m2.base, 2).basis) ==
        std::vector<std::string>{"1", "Y2^2 + Y2", "Y1^2 + Y1"});
  CHECK(as_strings(invariants_bruteforce(build_cp2_example(k2), 0).basis) == std::vector<std::string>{"1"});
  CHECK(format_invariants(invariants_bruteforce(m1.base, 2)) == "INV 0 1\nINV 2 Y^2 + Y\n");
}

TEST_CASE("brute-force invariants: dimension matches exhaustive count over GF(2)") {
  const auto k2 = FieldCtx::create(2, 1);
  std::vector<GAlgebra> algebras{build_mho(k2, 2, 1).base, build_mho(k2, 2, 2).base, build_cp2_example(k2),
                                 build_dk(k2, group_cyclic(2, 1)).base, build_dk(k2, group_cyclic(2, 2)).base,
                                 trivial_algebra(k2, {"x", "y"})};
  for (const auto& a : algebras) {
    std::size_t prev = 0;
    for (unsigned d = 0; d <= 3; ++d) {
      if (monomials_up_to(a.ring()->nvars(), d).size() >= 20) break;
      const auto b = invariants_bruteforce(a, d);
      for (const auto& f : b.basis) {
        REQUIRE(a.is_invariant(f));
        REQUIRE(f.total_degree() <= static_cast<int>(d));
        REQUIRE(f.leading().coeff == 1);
      }
      REQUIRE((std::size_t{1} << b.basis.size()) == count_invariants_gf2(a, d));
      REQUIRE(b.basis.size() >= prev);
      prev = b.basis.size();
    }
  }
}

TEST_CASE("brute-force invariants: linear independence over larger fields") {
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {2, 2}}) {
    const auto k = FieldCtx::create(p, s);
    const auto a = build_mho(k, p, 1).base;
    for (unsigned d = 0; d <= 2 * p; ++d) {
      const auto b = invariants_bruteforce(a, d);
      // invariants of k[Y] under translation are k[Y^p - Y]
      REQUIRE(b.basis.size() == d / p + 1);
      for (std::size_t i = 0; i < b.basis.size(); ++i) {
        REQUIRE(a.is_invariant(b.basis[i]));
        for (std::size_t j = 0; j < i; ++j) REQUIRE(b.basis[i].leading().mono != b.basis[j].leading().mono);
      }
    }
  }
}

TEST_CASE("Artin-Schreier generators") {
  const auto k2 = FieldCtx::create(2, 1), k3 = FieldCtx::create(3, 1);
  const auto a21 = artin_schreier_gens(build_mho(k2, 2, 1));
  CHECK(as_strings(a21.generators) == std::vector<std::string>{"Y^2 + Y"});
  CHECK(a21.spans_degree_p);
  const auto a31 = artin_schreier_gens(build_mho(k3, 3, 1));
  CHECK(as_strings(a31.generators) == std::vector<std::string>{"Y^3 + 2*Y"});
  CHECK(a31.spans_degree_p);
  const auto a22 = artin_schreier_gens(build_mho(k2, 2, 2));
  CHECK(as_strings(a22.generators) == std::vector<std::string>{"Y1^2 + Y1", "Y2^2 + Y2"});
  CHECK(a22.spans_degree_p);
}

TEST_CASE("erasure invariants") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto b = build_balpha(k2, {FieldElement::one(k2)}).base;
  const auto pt = certify_point(b, b.parse("Z"));
  REQUIRE(pt);
  const auto tri = is_triangular(b, {0});
  REQUIRE(tri);
  const auto cert = erasure_lambdas(b, *pt, b, *tri);
  const auto& alg = cert.tensor.algebra;
  REQUIRE(cert.lambdas.size() == 1);
  const auto z1 = Polynomial::variable(alg.ring(), 0), z2 = Polynomial::variable(alg.ring(), 1);
  const auto one = Polynomial::constant(alg.ring(), 1);
  CHECK(cert.lambdas[0] == z1 + z2 + one);
  CHECK(alg.is_invariant(cert.lambdas[0]));
  // Z2 = lambda + Z1 + 1
  CHECK(cert.rewrites[0].to_string() == "Z + L1 + 1");

  // D_k(C_2) erasing the same B
  const auto dk = build_dk(k2, group_cyclic(2, 1));
  const auto dpt = certify_point(dk.base, dk.x1);
  const auto dcert = erasure_lambdas(dk.base, *dpt, b, *tri);
  CHECK(dcert.tensor.algebra.is_invariant(dcert.lambdas[0]));
  CHECK(dcert.lambdas[0].total_degree() == 1);

  // a trivially acting Gamma is erased by T itself
  const auto triv = trivial_algebra(k2, {"T"});
  const auto tcert = erasure_lambdas(b, *pt, triv, *is_triangular(triv, {0}));
  CHECK(tcert.lambdas[0] == Polynomial::variable(tcert.tensor.algebra.ring(), 1));
}

TEST_CASE("erasure over the named examples: rewrites substitute back exactly") {
  for (unsigned p : {2u, 3u}) {
    const auto k = FieldCtx::create(p, 1);
    const auto m = build_mho(k, p, 1).base;
    const auto cp2 = build_cp2_example(k);
    const auto m2 = build_mho(k, p, 2).base;
    for (const auto* a : {&m, &m2}) {
      const auto pt = find_point(*a, static_cast<unsigned>(a->group()->order()));
      REQUIRE(pt);
      for (const auto* gamma : {&m, &m2}) {
        if (a->group()->order() != gamma->group()->order()) continue;
        const auto tri = find_triangular_order(*gamma);
        REQUIRE(tri);
        const auto cert = erasure_lambdas(*a, *pt, *gamma, *tri);
        const auto& alg = cert.tensor.algebra;
        const std::size_t na = a->ring()->nvars();
        // substitute A-variables and lambdas into each rewrite
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < na; ++i) images.push_back(Polynomial::variable(alg.ring(), i));
        for (const auto& l : cert.lambdas) images.push_back(l);
        const VarMap back{cert.rewrite_ring, alg.ring(), images};
        for (std::size_t i = 0; i < cert.t_vars.size(); ++i) {
          REQUIRE(alg.is_invariant(cert.lambdas[i]));
          REQUIRE(apply_map(back, cert.rewrites[i]) == Polynomial::variable(alg.ring(), cert.t_vars[i]));
        }
      }
    }
    // the C_{p^2} example erases itself
    const auto pt = find_point(cp2, p * p);
    REQUIRE(pt);
    const auto cert = erasure_lambdas(cp2, *pt, cp2, *is_triangular(cp2, {1, 0}));
    for (const auto& l : cert.lambdas) REQUIRE(cert.tensor.algebra.is_invariant(l));
  }
}

TEST_CASE("invariant ring by elimination") {
  const auto k2 = FieldCtx::create(2, 1), k3 = FieldCtx::create(3, 1), k4 = FieldCtx::create(2, 2);
  const auto r1 = invariant_ring_elimination(build_mho(k2, 2, 1).base);
  CHECK(as_strings(r1.generators) == std::vector<std::string>{"Y^2 + Y"});
  CHECK(r1.verified());
  CHECK(r1.d_check == 2);
  const auto r2 = invariant_ring_elimination(build_mho(k2, 2, 2).base);
  CHECK(r2.generators.size() == 2);
  CHECK(r2.verified());
  const auto r3 = invariant_ring_elimination(build_mho(k3, 3, 1).base);
  CHECK(as_strings(r3.generators) == std::vector<std::string>{"Y^3 + 2*Y"});
  CHECK(r3.verified());
  const auto b = build_balpha(k4, {FieldElement::one(k4), FieldElement::t(k4)});
  const auto r4 = invariant_ring_elimination(b.base);
  CHECK(as_strings(r4.generators) == std::vector<std::string>{"Z^4 + Z"});
  CHECK(r4.verified());
  CHECK(r4.d_check == 4);
  // product of the orbit offsets: prod_g (Z - alpha_g) = Z^4 + Z
  auto prod = Polynomial::constant(b.base.ring(), 1);
  for (const auto& al : b.alpha_of) prod *= b.base.parse("Z") - Polynomial::constant(b.base.ring(), al.code());
  CHECK(prod == r4.generators[0]);

  // every brute-force invariant up to the check degree is a member
  for (const auto& [alg, res] : std::vector<std::pair<GAlgebra, EliminationResult>>{{build_mho(k2, 2, 2).base, r2}}) {
    const SubalgebraMembership sm(res.generators);
    for (const auto& f : invariants_bruteforce(alg, res.d_check).basis) REQUIRE(sm.test(f).member);
    for (const auto& g : res.generators) REQUIRE(alg.is_invariant(g));
  }
  // C_4 is not elementary abelian
  CHECK_THROWS_AS(invariant_ring_elimination(build_cp2_example(k2)), std::invalid_argument);
}

TEST_CASE("freeness on rational points") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto dk = build_dk(k2, group_cyclic(2, 1));
  const auto r = freeness_on_points(dk.base, 2);
  CHECK(r.free);
  CHECK_FALSE(r.partial);
  CHECK(r.witnesses.empty());
  CHECK(r.points_checked == 2 + 4);
  const auto c = freeness_on_points(build_cp2_example(k2), 2);
  CHECK(c.free);
  CHECK(c.points_checked == 4 + 16);
  const auto triv = trivial_algebra(k2, {"x"});
  const auto t = freeness_on_points(triv, 1);
  CHECK_FALSE(t.free);
  REQUIRE_FALSE(t.witnesses.empty());
  CHECK(t.witnesses[0].element == 1);
  CHECK(format_freeness(triv, t).find("WITNESS") != std::string::npos);
  // a tiny cap leaves the enumeration partial, but unit fixed-point ideals
  // still certify freeness
  const auto capped = freeness_on_points(build_mho(k2, 2, 2).base, 2, 3);
  CHECK(capped.partial);
  CHECK(capped.ideals_unit);
  CHECK(capped.free);
}

TEST_CASE("orbit of a point is a free basis over the invariants") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto cp2 = build_cp2_example(k2);
  CHECK(free_basis_check(cp2, cp2.parse("x*y"), 2).independent());
  const auto m = build_mho(FieldCtx::create(3, 1), 3, 1).base;
  CHECK(free_basis_check(m, m.parse("2*Y^2"), 3).independent());
  // a non-point orbit can be dependent: Y and its translate differ by a constant
  const auto m2 = build_mho(k2, 2, 1).base;
  CHECK_FALSE(free_basis_check(m2, m2.parse("1"), 2).independent());
}
