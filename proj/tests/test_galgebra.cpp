#include <doctest.h>

#include "modinv/constructions.hpp"
#include "modinv/galgebra.hpp"

using namespace modinv;

namespace {

// C_4 on GF(2)[x, y]: x -> x + y, y -> y + 1.
GAlgebra c4_example() {
  const auto k = FieldCtx::create(2, 1);
  const auto r = Ring::create(k, {"x", "y"});
  return GAlgebra::make(r, group_cyclic(2, 2), {VarMap{r, r, {parse_polynomial(r, "x + y"), parse_polynomial(r, "y + 1")}}});
}

GAlgebra translation(unsigned p, const std::string& image) {
  const auto k = FieldCtx::create(p, 1);
  const auto r = Ring::create(k, {"Y"});
  return GAlgebra::make(r, group_cyclic(p, 1), {VarMap{r, r, {parse_polynomial(r, image)}}});
}

}  // namespace

TEST_CASE("group actions are validated") {
  const auto c2 = translation(2, "Y + 1");
  CHECK(c2.act(c2.parse("Y"), 1).to_string() == "Y + 1");
  const auto a = c4_example();
  CHECK(a.act(a.parse("x"), 2).to_string() == "x + 1");
  CHECK(a.act(a.parse("x"), 0).to_string() == "x");
  // (x)g^3 = x + y + 1 by direct substitution three times
  const auto x = a.parse("x");
  CHECK(a.act(x, 3) == a.act(a.act(a.act(x, 1), 1), 1));
  // Y -> Y + 1 does not have order 3
  const auto k2 = FieldCtx::create(2, 1);
  const auto r = Ring::create(k2, {"Y"});
  CHECK_THROWS(GAlgebra::make(r, group_cyclic(3, 1), {VarMap{r, r, {parse_polynomial(r, "Y + 1")}}}));
  // Y -> Y^2 squared is Y^4, not Y
  CHECK_THROWS_AS(GAlgebra::make(r, group_cyclic(2, 1), {VarMap{r, r, {parse_polynomial(r, "Y^2")}}}), ActionError);
  // a non-faithful action is still an action: x -> x + 1 has order 2 inside C_4
  const auto r2 = Ring::create(k2, {"x", "y"});
  CHECK_NOTHROW(GAlgebra::make(r2, group_cyclic(2, 2), {VarMap{r2, r2, {parse_polynomial(r2, "x + 1"), parse_polynomial(r2, "y")}}}));
}

TEST_CASE("the action is a right action on every element") {
  const auto a = c4_example();
  const auto& g = *a.group();
  const auto f = a.parse("x^2*y + x + y^3");
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) REQUIRE(a.act(a.act(f, u), v) == a.act(f, g.mul(u, v)));
}

TEST_CASE("act and trace") {
  const auto a = c4_example();
  CHECK(a.act(a.parse("x*y"), 1).to_string() == "x*y + y^2 + x + y");  // grevlex order
  CHECK(a.trace(a.parse("x*y")).to_string() == "1");
  const auto g3 = translation(3, "Y - 1");
  CHECK(g3.act(g3.parse("Y"), 1).to_string() == "Y + 2");
  CHECK(g3.trace(g3.parse("2*Y^2")).to_string() == "1");
  // invariants are killed by the trace
  CHECK(g3.trace(g3.parse("Y^3 - Y")).is_zero());
  CHECK(a.orbit(a.parse("y")).size() == 4);
}

TEST_CASE("invariance") {
  const auto c2 = translation(2, "Y + 1");
  CHECK(c2.is_invariant(c2.parse("1")));
  CHECK(c2.is_invariant(c2.parse("Y^2 + Y")));
  CHECK_FALSE(c2.is_invariant(c2.parse("Y")));
}

TEST_CASE("point search") {
  const auto c2 = translation(2, "Y + 1");
  const auto p2 = find_point(c2, 1);
  REQUIRE(p2);
  CHECK(p2->element.to_string() == "Y");
  const auto g3 = translation(3, "Y - 1");
  CHECK_FALSE(find_point(g3, 1));
  const auto p3 = find_point(g3, 2);
  REQUIRE(p3);
  CHECK(g3.trace(p3->element).to_string() == "1");
  CHECK(p3->element.total_degree() == 2);
  const auto a = c4_example();
  CHECK_FALSE(find_point(a, 1));
  const auto pa = find_point(a, 2);
  REQUIRE(pa);
  CHECK(a.trace(pa->element).to_string() == "1");
  REQUIRE(pa->orbit.size() == 4);
  for (std::size_t g = 0; g < 4; ++g) CHECK(pa->orbit[g] == a.act(pa->element, g));
  CHECK(certify_point(a, a.parse("x*y")));
  CHECK_FALSE(certify_point(a, a.parse("x")));
  // trivial action: no element has trace 1
  const auto k2 = FieldCtx::create(2, 1);
  const auto r = Ring::create(k2, {"Y"});
  const auto triv = GAlgebra::make(r, group_cyclic(2, 1), {VarMap::identity(r)});
  CHECK_FALSE(find_point(triv, 3));
}

TEST_CASE("triangularity") {
  const auto a = c4_example();
  const auto yx = is_triangular(a, {1, 0});
  REQUIRE(yx);
  CHECK(yx->offsets[0][0].to_string() == "1");
  CHECK(yx->offsets[0][1].to_string() == "y");
  CHECK_FALSE(is_triangular(a, {0, 1}));
  CHECK_THROWS(is_triangular(a, {0}));
  CHECK_THROWS(is_triangular(a, {0, 0}));
  const auto found = find_triangular_order(a);
  REQUIRE(found);
  CHECK(found->var_order == std::vector<std::size_t>{1, 0});
  const auto m = build_mho(FieldCtx::create(2, 1), 2, 2);
  CHECK(is_triangular(m.base, {0, 1}));
  CHECK(is_triangular(m.base, {1, 0}));
}

TEST_CASE("reflexive points of D_k(C_2)") {
  const auto dk = build_dk(FieldCtx::create(2, 1), group_cyclic(2, 1));
  const auto& a = dk.base;
  const auto x = dk.x1;  // the class of x_1, here x@1 + 1
  CHECK(x == a.parse("x@1 + 1"));
  CHECK(is_reflexive_point(dk, x));
  CHECK_FALSE(is_reflexive_point(dk, a.parse("x@1")));
  const auto w = x + (x * x + x);
  CHECK(a.trace(w).to_string() == "1");
  CHECK_FALSE(is_reflexive_point(dk, w));
  CHECK(a.trace(x * x).to_string() == "1");
  CHECK_FALSE(is_reflexive_point(dk, x * x));
}

TEST_CASE("morphisms out of D_k") {
  const auto a = c4_example();
  const auto dk = build_dk(a.field(), a.group());
  const auto pt = certify_point(a, a.parse("x*y"));
  REQUIRE(pt);
  const auto m = morphism_from_point(dk, a, *pt);
  CHECK(m.equivariant);
  CHECK(is_equivariant(dk.base, a, m.map));
  // well defined: the image of x_1 is (a)1 = a
  CHECK(apply_map(m.map, dk.x1) == a.parse("x*y"));
  // D_k into itself through its own x_1-class gives the identity
  const auto self = morphism_from_point(dk, dk.base, *certify_point(dk.base, dk.x1));
  CHECK(self.map == VarMap::identity(dk.base.ring()));
}

TEST_CASE("tensor products") {
  const auto b = translation(2, "Y + 1");
  const auto t = tensor(b, b);
  CHECK(t.ring()->nvars() == 2);
  CHECK(t.group()->order() == 4);
  CHECK(t.group()->is_elementary_abelian());
  // each generator moves exactly one factor
  const auto& gens = t.group()->gens();
  REQUIRE(gens.size() == 2);
  const auto v0 = Polynomial::variable(t.ring(), 0), v1 = Polynomial::variable(t.ring(), 1);
  CHECK(((t.act(v0, gens[0]) == v0) != (t.act(v1, gens[0]) == v1)));
  CHECK(((t.act(v0, gens[1]) == v0) != (t.act(v1, gens[1]) == v1)));
  // A (x) k with the trivial group is A
  const auto k2 = FieldCtx::create(2, 1);
  const auto empty = Ring::create(k2, {});
  const auto trivial = GAlgebra::make(empty, group_cyclic(2, 0), {});
  const auto same = tensor(b, trivial);
  CHECK(same.ring()->nvars() == 1);
  CHECK(same.group()->order() == 2);
  CHECK(same.act(Polynomial::variable(same.ring(), 0), 1).to_string() == "Y + 1");

  const auto ss = same_side_tensor(b, b);
  CHECK(ss.algebra.group()->order() == 2);
  CHECK(ss.algebra.ring()->vars() == disjoint_names({"Y"}, {"Y"}));
  for (std::size_t i = 0; i < 2; ++i) {
    const auto v = Polynomial::variable(ss.algebra.ring(), i);
    CHECK(ss.algebra.act(v, 1) == v + Polynomial::constant(ss.algebra.ring(), 1));
  }
  CHECK(is_equivariant(b, ss.algebra, ss.inject_a));
  CHECK(is_equivariant(b, ss.algebra, ss.inject_b));
}

TEST_CASE("disjoint names") {
  CHECK(disjoint_names({"x", "y"}, {"z"}) == std::vector<std::string>{"x", "y", "z"});
  const auto n = disjoint_names({"Y"}, {"Y"});
  REQUIRE(n.size() == 2);
  CHECK(n[0] == "Y");
  CHECK(n[1] != "Y");
}
