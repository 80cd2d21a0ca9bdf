#include <doctest.h>

#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/linalg.hpp"

using namespace modinv;

namespace {

// Schoolbook arithmetic on coefficient vectors modulo the field's modulus,
// independent of the log/Zech tables.
std::vector<unsigned> naive_mul(const FieldCtx& k, std::vector<unsigned> a, std::vector<unsigned> b) {
  const unsigned p = k.p(), s = k.s();
  std::vector<unsigned> prod(2 * s, 0);
  for (unsigned i = 0; i < s; ++i)
    for (unsigned j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& m = k.modulus();
  for (unsigned d = 2 * s - 1; d >= s; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i <= s; ++i) prod[d - s + i] = (prod[d - s + i] + (p - c) * m[i] % p) % p;
  }
  prod.resize(s);
  return prod;
}

std::vector<FieldPtr> small_fields() {
  std::vector<FieldPtr> out;
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {5, 2}, {3, 4}})
    out.push_back(FieldCtx::create(p, s));
  return out;
}

// F_p-independence by enumerating every nontrivial combination.
bool independent_oracle(const std::vector<FieldElement>& a) {
  if (a.empty()) return true;
  const FieldPtr& k = a[0].ctx();
  const unsigned p = k->p();
  std::vector<unsigned> c(a.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) return true;
    FieldElement acc = FieldElement::zero(k);
    for (std::size_t j = 0; j < a.size(); ++j) acc += FieldElement::from_int(k, c[j]) * a[j];
    if (acc.is_zero()) return false;
  }
}

}  // namespace

TEST_CASE("default moduli") {
  CHECK(FieldCtx::create(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(FieldCtx::create(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(FieldCtx::create(2, 3)->modulus() == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(FieldCtx::create(2, 1)->q() == 2);
  CHECK(FieldCtx::create(3, 1)->spec() == "GF(3)");
  CHECK(FieldCtx::create(2, 2)->spec() == "GF(2^2)/1,1,1");
}

TEST_CASE("moduli have no roots (irreducible for s <= 3)") {
  for (const auto& k : small_fields()) {
    if (k->s() > 3) continue;
    const auto& m = k->modulus();
    for (unsigned x = 0; x < k->p(); ++x) {
      unsigned v = 0;
      for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % k->p();
      if (k->s() > 1) CHECK(v != 0);
    }
  }
}

TEST_CASE("field creation errors") {
  CHECK_THROWS(FieldCtx::create(4, 1));
  CHECK_THROWS(FieldCtx::create(2, 2, std::vector<unsigned>{1, 0, 1}));  // t^2 + 1 = (t+1)^2
  CHECK_THROWS(FieldCtx::create(3, 5));                                  // 243 > default cap
  CHECK_NOTHROW(FieldCtx::create(3, 5, std::nullopt, FieldCaps{13, 243}));
  CHECK(is_irreducible_mod_p({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
}

TEST_CASE("multiplication matches schoolbook arithmetic") {
  for (const auto& k : small_fields())
    for (FieldCtx::Code a = 0; a < k->q(); ++a)
      for (FieldCtx::Code b = 0; b < k->q(); ++b)
        REQUIRE(k->coeffs(k->mul(a, b)) == naive_mul(*k, k->coeffs(a), k->coeffs(b)));
}

TEST_CASE("field axioms exhaustively") {
  for (const auto& k : small_fields()) {
    const auto q = k->q();
    for (FieldCtx::Code a = 0; a < q; ++a) {
      REQUIRE(k->add(a, k->neg(a)) == 0);
      REQUIRE(k->mul(a, 1) == a);
      if (a) REQUIRE(k->mul(a, k->inv(a)) == 1);
      REQUIRE(k->from_coeffs(k->coeffs(a)) == a);
      REQUIRE(k->frobenius(a, k->s()) == a);
      for (FieldCtx::Code b = 0; b < q; ++b) {
        REQUIRE(k->add(a, b) == k->add(b, a));
        REQUIRE(k->mul(a, b) == k->mul(b, a));
        // Frobenius is additive
        REQUIRE(k->frobenius(k->add(a, b), 1) == k->add(k->frobenius(a, 1), k->frobenius(b, 1)));
      }
    }
    // associativity and distributivity on a stride through the field
    const FieldCtx::Code step = q > 27 ? 5 : 1;
    for (FieldCtx::Code a = 0; a < q; a += step)
      for (FieldCtx::Code b = 0; b < q; b += step)
        for (FieldCtx::Code c = 0; c < q; c += step) {
          REQUIRE(k->mul(k->mul(a, b), c) == k->mul(a, k->mul(b, c)));
          REQUIRE(k->add(k->add(a, b), c) == k->add(a, k->add(b, c)));
          REQUIRE(k->mul(a, k->add(b, c)) == k->add(k->mul(a, b), k->mul(a, c)));
        }
  }
}

TEST_CASE("element formatting and frobenius examples") {
  const auto k4 = FieldCtx::create(2, 2);
  const auto t = FieldElement::t(k4);
  CHECK(t.to_string() == "t");
  CHECK(frobenius(t, 1).to_string() == "t+1");
  CHECK(frobenius(FieldElement::zero(k4), 3).is_zero());
  const auto k3 = FieldCtx::create(3, 1);
  for (int v = 0; v < 3; ++v) CHECK(frobenius(FieldElement::from_int(k3, v), 2) == FieldElement::from_int(k3, v));
  const auto k9 = FieldCtx::create(3, 2);
  CHECK((FieldElement::t(k9) * FieldElement::from_int(k9, 2) + FieldElement::one(k9)).to_string() == "2*t+1");
  CHECK(k9->is_compound(k9->add(k9->generator(), 1)));
  CHECK_FALSE(k9->is_compound(k9->generator()));
}

TEST_CASE("mixed contexts are rejected") {
  const auto a = FieldElement::one(FieldCtx::create(2, 1));
  const auto b = FieldElement::one(FieldCtx::create(3, 1));
  CHECK_THROWS_AS(a + b, ContextMismatch);
  // Two contexts for the same field interoperate.
  const auto c = FieldElement::one(FieldCtx::create(2, 1));
  CHECK((a + c).is_zero());
}

TEST_CASE("moore determinant examples") {
  const auto k2 = FieldCtx::create(2, 1);
  const auto k4 = FieldCtx::create(2, 2);
  const auto one = FieldElement::one(k4), t = FieldElement::t(k4);
  CHECK(moore_det(std::vector{FieldElement::one(k2)}) == FieldElement::one(k2));
  CHECK(moore_det(std::vector{one, t}) == one);
  CHECK(moore_det(std::vector{one, one}).is_zero());
  CHECK(fp_independent(std::vector{one, t}));
  CHECK_FALSE(fp_independent(std::vector{one, one}));
  CHECK(fp_independent(std::vector<FieldElement>{}));
  CHECK_FALSE(fp_independent(std::vector{one, t, t + one}));  // n > s
}

TEST_CASE("moore independence agrees with exhaustive combinations") {
  for (const auto& k : small_fields()) {
    if (k->q() > 27) continue;
    const auto q = k->q();
    for (FieldCtx::Code a = 0; a < q; ++a) {
      std::vector<FieldElement> one{{k, a}};
      REQUIRE(fp_independent(one) == independent_oracle(one));
      for (FieldCtx::Code b = 0; b < q; ++b) {
        std::vector<FieldElement> two{{k, a}, {k, b}};
        REQUIRE(fp_independent(two) == independent_oracle(two));
        REQUIRE(fp_independent(two) == !moore_det(two).is_zero());
        for (FieldCtx::Code c = 0; c < q; ++c) {
          std::vector<FieldElement> three{{k, a}, {k, b}, {k, c}};
          REQUIRE(fp_independent(three) == independent_oracle(three));
        }
      }
    }
  }
}

TEST_CASE("moore inverse") {
  const auto k4 = FieldCtx::create(2, 2);
  const auto one = FieldElement::one(k4), t = FieldElement::t(k4);
  const MooreSystem sys = moore_inverse(std::vector{one, t});
  REQUIRE(sys.inverse);
  const auto& f = *sys.inverse;
  CHECK(f[0][0] == t + one);
  CHECK(f[0][1] == t);
  CHECK(f[1][0] == one);
  CHECK(f[1][1] == one);
  CHECK(linearized_eval(f[0], one) == one);
  CHECK(linearized_eval(f[0], t).is_zero());
  CHECK(linearized_eval(f[1], one).is_zero());
  CHECK(linearized_eval(f[1], t) == one);
  CHECK_THROWS_AS(moore_inverse(std::vector{one, one}), SingularSystem);
  const auto k2 = FieldCtx::create(2, 1);
  CHECK((*moore_inverse(std::vector{FieldElement::one(k2)}).inverse)[0][0] == FieldElement::one(k2));
}

TEST_CASE("moore inverse delta property on every independent pair and triple of GF(8), GF(9), GF(27)") {
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {3, 3}}) {
    const auto k = FieldCtx::create(p, s);
    for (FieldCtx::Code a = 1; a < k->q(); ++a)
      for (FieldCtx::Code b = 1; b < k->q(); b += (s == 3 ? 3 : 1)) {
        std::vector<FieldElement> al{{k, a}, {k, b}};
        if (!fp_independent(al)) {
          CHECK_THROWS_AS(moore_inverse(al), SingularSystem);
          continue;
        }
        const auto sys = moore_inverse(al);
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            REQUIRE(linearized_eval((*sys.inverse)[i], al[j]) ==
                    (i == j ? FieldElement::one(k) : FieldElement::zero(k)));
      }
  }
}

TEST_CASE("linearized evaluation") {
  const auto k9 = FieldCtx::create(3, 2);
  const auto c = FieldElement::t(k9) + FieldElement::from_int(k9, 2);
  for (FieldCtx::Code x = 0; x < k9->q(); ++x) {
    const FieldElement fx{k9, x};
    CHECK(linearized_eval(std::vector{c}, fx) == c * fx);
    CHECK(linearized_eval(std::vector{c, c}, fx) == c * fx + c * fx.pow(3));
  }
  CHECK(linearized_eval(std::vector{c, c}, FieldElement::zero(k9)).is_zero());
}

TEST_CASE("dense linear algebra") {
  const auto k = FieldCtx::create(3, 1);
  FqMatrix m(k, 2, 3);
  // [1 2 0; 2 1 0] has rank 1 over GF(3)
  m.at(0, 0) = 1, m.at(0, 1) = 2, m.at(1, 0) = 2, m.at(1, 1) = 1;
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    for (std::size_t r = 0; r < 2; ++r) {
      FieldCtx::Code acc = 0;
      for (std::size_t c = 0; c < 3; ++c) acc = k->add(acc, k->mul(m.at(r, c), v[c]));
      CHECK(acc == 0);
    }
  const std::vector<FieldCtx::Code> rhs{1, 2};
  const auto x = solve(m, rhs);
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 0);  // free variable set to zero
  const std::vector<FieldCtx::Code> bad{1, 1};
  CHECK_FALSE(solve(m, bad));
  FqMatrix sq(k, 2, 2);
  sq.at(0, 0) = 1, sq.at(0, 1) = 1, sq.at(1, 1) = 2;
  CHECK(determinant(sq) == 2);
  const auto inv = inverse(sq);
  REQUIRE(inv);
  CHECK(inv->at(0, 0) == 1);
  CHECK(inv->at(0, 1) == 1);  // -1/2 = 1 in GF(3)
  CHECK(inv->at(1, 1) == 2);
  CHECK(inverse(FqMatrix(k, 0, 0)));
}
