#include <doctest.h>

#include <random>

#include "modinv/polyring.hpp"

using namespace modinv;

namespace {

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_deg, int terms) {
  std::uniform_int_distribution<unsigned> coeff(0, r->field()->q() - 1);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (auto& e : m) e = static_cast<Exponent>(exp(rng));
    ts.push_back({m, coeff(rng)});
  }
  return Polynomial::from_terms(r, ts);
}

}  // namespace

TEST_CASE("basic arithmetic examples") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto r = Ring::create(k2, {"Y", "Z"});
  const auto y = Polynomial::variable(r, "Y"), z = Polynomial::variable(r, "Z");
  const auto one = Polynomial::constant(r, 1);
  CHECK(((y + one) + (y + one)).is_zero());
  CHECK(((y + one) * (y + one)).to_string() == "Y^2 + 1");
  CHECK((y * z).to_string() == "Y*Z");
  CHECK(Polynomial(r).to_string() == "0");
  CHECK((y + one).pow(4) == y.pow(4) + one);
}

TEST_CASE("printing is canonical") {
  const auto k4 = FieldCtx::create(2, 2);
  const auto r = Ring::create(k4, {"Y1", "Y2"});
  const auto f = parse_polynomial(r, "1 + t*Y2*Y1 + Y1^2");
  CHECK(f.to_string() == "Y1^2 + t*Y1*Y2 + 1");
  CHECK(parse_polynomial(r, "(t+1)*Y1").to_string() == "(t+1)*Y1");
  CHECK(parse_polynomial(r, "Y1*(Y2 + t)^2").to_string() == "Y1*Y2^2 + (t+1)*Y1");
  const auto k3 = FieldCtx::create(3, 1);
  const auto r3 = Ring::create(k3, {"Y"});
  CHECK(parse_polynomial(r3, "-Y").to_string() == "2*Y");
  CHECK(parse_polynomial(r3, "Y - 1").to_string() == "Y + 2");
  CHECK(parse_polynomial(r3, "5").to_string() == "2");
}

TEST_CASE("parse / print round trip on random polynomials") {
  std::mt19937 rng(7);
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 2}, {5, 1}})
    for (auto order : {MonomialOrder::lex, MonomialOrder::grevlex}) {
      const auto r = Ring::create(FieldCtx::create(p, s), {"a", "b@1", "c_2"}, order);
      for (int i = 0; i < 50; ++i) {
        const auto f = random_poly(r, rng, 3, 6);
        REQUIRE(parse_polynomial(r, f.to_string()) == f);
      }
    }
}

TEST_CASE("parse errors carry a column") {
  const auto r = Ring::create(FieldCtx::create(2, 1), {"Y"});
  try {
    parse_polynomial(r, "Y + Q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial(r, "Y +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "(Y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "Y^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "t"), ParseError);  // GF(2) has no generator symbol
  CHECK_THROWS(Ring::create(FieldCtx::create(2, 1), {"t"}));
  CHECK_THROWS(Ring::create(FieldCtx::create(2, 1), {"Y", "Y"}));
}

TEST_CASE("monomial orders") {
  const auto k = FieldCtx::create(2, 1);
  const auto lex = Ring::create(k, {"x", "y"}, MonomialOrder::lex);
  const auto grl = Ring::create(k, {"x", "y"}, MonomialOrder::grevlex);
  // x > y^5 in lex, y^5 > x in grevlex
  CHECK(lex->compare({1, 0}, {0, 5}) > 0);
  CHECK(grl->compare({1, 0}, {0, 5}) < 0);
  // grevlex: x*y^2 vs x^2*z style tie-break: x^2 y^0 vs x y^1 at degree 2
  const auto g3 = Ring::create(k, {"x", "y", "z"}, MonomialOrder::grevlex);
  CHECK(g3->compare({1, 0, 1}, {0, 2, 0}) < 0);  // xz < y^2
  CHECK(g3->compare({2, 0, 0}, {1, 1, 0}) > 0);
  CHECK(parse_polynomial(lex, "y^5 + x").to_string() == "x + y^5");
  CHECK(parse_polynomial(grl, "y^5 + x").to_string() == "y^5 + x");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const auto r = Ring::create(FieldCtx::create(p, s), {"x", "y", "z"});
    for (int i = 0; i < 30; ++i) {
      const auto a = random_poly(r, rng, 2, 4), b = random_poly(r, rng, 2, 4), c = random_poly(r, rng, 2, 4);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      REQUIRE((a - a).is_zero());
      REQUIRE(a.pow(3) == a * a * a);
    }
  }
}

TEST_CASE("ring mismatch is rejected") {
  const auto k = FieldCtx::create(2, 1);
  const auto r1 = Ring::create(k, {"x"}), r2 = Ring::create(k, {"y"});
  CHECK_THROWS_AS(Polynomial::variable(r1, 0) + Polynomial::variable(r2, 0), RingMismatch);
}

TEST_CASE("substitution maps") {
  const auto k = FieldCtx::create(2, 1);
  const auto ry = Ring::create(k, {"Y"}), rz = Ring::create(k, {"Z"});
  const auto y = Polynomial::variable(ry, 0), z = Polynomial::variable(rz, 0);
  const VarMap m{ry, rz, {z * z}};
  CHECK(apply_map(m, y + Polynomial::constant(ry, 1)).to_string() == "Z^2 + 1");
  CHECK(apply_map(VarMap::identity(ry), y * y + y) == y * y + y);
  const VarMap shift{ry, ry, {y + Polynomial::constant(ry, 1)}};
  CHECK(compose_maps(shift, shift) == VarMap::identity(ry));
  CHECK(compose_maps(VarMap::identity(ry), m) == m);
  CHECK_THROWS(validate(VarMap{ry, rz, {}}));
}

TEST_CASE("apply_map is a homomorphism and composition is sequential application") {
  std::mt19937 rng(3);
  const auto k = FieldCtx::create(3, 1);
  const auto r = Ring::create(k, {"x", "y"});
  const auto s = Ring::create(k, {"u", "v", "w"});
  for (int i = 0; i < 20; ++i) {
    const VarMap m1{r, s, {random_poly(s, rng, 2, 3), random_poly(s, rng, 2, 3)}};
    const VarMap m2{s, r, {random_poly(r, rng, 1, 3), random_poly(r, rng, 1, 3), random_poly(r, rng, 1, 3)}};
    const auto f = random_poly(r, rng, 2, 4), g = random_poly(r, rng, 2, 4);
    REQUIRE(apply_map(m1, f + g) == apply_map(m1, f) + apply_map(m1, g));
    REQUIRE(apply_map(m1, f * g) == apply_map(m1, f) * apply_map(m1, g));
    REQUIRE(apply_map(compose_maps(m1, m2), f) == apply_map(m2, apply_map(m1, f)));
  }
}

TEST_CASE("monomial helpers") {
  CHECK(monomials_up_to(2, 2).size() == 6);
  CHECK(monomials_up_to(3, 0).size() == 1);
  CHECK(monomials_up_to(0, 4).size() == 1);
  CHECK(divides({1, 0}, {2, 1}));
  CHECK_FALSE(divides({1, 2}, {2, 1}));
  CHECK(mono_lcm({1, 2}, {2, 1}) == Monomial{2, 2});
  CHECK(mono_div({2, 1}, {1, 0}) == Monomial{1, 1});
  CHECK_THROWS(mono_mul({60000}, {60000}));
}

TEST_CASE("remap and reorder") {
  const auto k = FieldCtx::create(2, 1);
  const auto r = Ring::create(k, {"a", "b"});
  const auto big = Ring::create(k, {"b", "x", "a"}, MonomialOrder::lex);
  const auto f = parse_polynomial(r, "a^2*b + b");
  const std::vector<std::size_t> idx{2, 0};
  CHECK(f.remap(big, idx).to_string() == "b*a^2 + b");  // factors follow ring variable order
  const auto lex = r->with_order(MonomialOrder::lex);
  CHECK(f.reorder(lex).ring()->order() == MonomialOrder::lex);
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in(0) == 2);
  CHECK(f.uses_var(1));
}
