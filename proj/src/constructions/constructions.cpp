#include "modinv/constructions.hpp"

#include <stdexcept>
#include <string>

#include "modinv/linalg.hpp"

namespace modinv {

namespace {

FieldElement combine(const FieldPtr& k, const std::vector<unsigned>& c, const std::vector<FieldElement>& alphas) {
  FieldElement acc = FieldElement::zero(k);
  for (std::size_t i = 0; i < c.size(); ++i) acc += FieldElement::from_int(k, c[i]) * alphas[i];
  return acc;
}

void require_elemab(const GroupPtr& g, const ElemAbCoords& coords, const FieldPtr& k, const char* where) {
  if (!g->is_elementary_abelian()) throw std::invalid_argument(std::string(where) + ": group is not elementary abelian");
  if (coords.coords.size() != g->order()) throw std::invalid_argument(std::string(where) + ": coordinates do not match the group");
  if (g->order() > 1 && coords.p != k->p())
    throw std::invalid_argument(std::string(where) + ": group prime differs from the field characteristic");
}

void require_same(const GAlgebra& a, const GAlgebra& b, const char* where) {
  if (!a.field()->same_field(*b.field())) throw ContextMismatch(std::string(where) + ": different fields");
  if (!(*a.group() == *b.group())) throw std::invalid_argument(std::string(where) + ": different groups");
}

// Z -> sum_j c_j Z^(p^j) in a univariate ring.
Polynomial linearized(const RingPtr& ring, std::size_t var, const std::vector<FieldElement>& c) {
  const FieldCtx& k = *ring->field();
  Polynomial out(ring);
  unsigned e = 1;
  for (const auto& cj : c) {
    Monomial m(ring->nvars(), 0);
    m[var] = static_cast<Exponent>(e);
    out += Polynomial::monomial(ring, m, cj.code());
    e *= k.p();
  }
  return out;
}

}  // namespace

DkAlgebra build_dk(const FieldPtr& k, const GroupPtr& g) {
  const std::size_t n = g->order();
  if (n <= 1) throw std::invalid_argument("build_dk: the group is trivial");
  std::vector<std::string> names;
  std::vector<std::size_t> var_element;
  for (std::size_t e = 1; e < n; ++e) {
    names.push_back("x@" + std::to_string(e));
    var_element.push_back(e);
  }
  const RingPtr ring = Ring::create(k, names);
  Polynomial x1 = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) x1 -= Polynomial::variable(ring, i);
  auto x_of = [&](std::size_t e) { return e == 0 ? x1 : Polynomial::variable(ring, e - 1); };

  std::vector<VarMap> maps;
  for (auto h : g->gens()) {
    VarMap m{ring, ring, {}};
    for (std::size_t e = 1; e < n; ++e) m.images.push_back(x_of(g->mul(e, h)));
    maps.push_back(std::move(m));
  }
  DkAlgebra dk{GAlgebra::make(ring, g, std::move(maps)), x1, std::move(var_element)};
  if (dk.base.trace(dk.x1) != Polynomial::constant(ring, 1))
    throw std::logic_error("build_dk: trace of the x_1 class is not 1");
  return dk;
}

MhoAlgebra build_mho(const FieldPtr& k, const GroupPtr& g, const ElemAbCoords& coords) {
  require_elemab(g, coords, k, "build_mho");
  const std::size_t n = coords.rank;
  std::vector<std::string> names;
  if (n == 1) {
    names.push_back("Y");
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i + 1));
  }
  const RingPtr ring = Ring::create(k, names);
  std::vector<VarMap> maps;
  for (auto gen : g->gens()) {
    VarMap m{ring, ring, {}};
    for (std::size_t i = 0; i < n; ++i)
      m.images.push_back(Polynomial::variable(ring, i) -
                         Polynomial::constant(ring, k->from_int(coords.coords[gen][i])));
    maps.push_back(std::move(m));
  }
  return {GAlgebra::make(ring, g, std::move(maps)), coords};
}

MhoAlgebra build_mho(const FieldPtr& k, unsigned p, unsigned n) {
  if (p != k->p()) throw std::invalid_argument("build_mho: p differs from the field characteristic");
  auto [g, coords] = group_elemab(p, n);
  return build_mho(k, g, coords);
}

BasicBAlpha build_balpha(const FieldPtr& k, const GroupPtr& g, const ElemAbCoords& coords,
                         std::vector<FieldElement> alphas) {
  require_elemab(g, coords, k, "build_balpha");
  if (alphas.size() != coords.rank)
    throw std::invalid_argument("build_balpha: expected " + std::to_string(coords.rank) + " alphas, got " +
                                std::to_string(alphas.size()));
  for (const auto& a : alphas)
    if (!a.ctx()->same_field(*k)) throw ContextMismatch("build_balpha: alpha from another field");
  if (!fp_independent(alphas)) throw std::invalid_argument("build_balpha: alphas are F_p-dependent");

  const RingPtr ring = Ring::create(k, {"Z"});
  const Polynomial z = Polynomial::variable(ring, 0);
  std::vector<FieldElement> alpha_of;
  for (const auto& c : coords.coords) alpha_of.push_back(combine(k, c, alphas));
  std::vector<VarMap> maps;
  for (auto gen : g->gens()) maps.push_back(VarMap{ring, ring, {z - Polynomial::constant(ring, alpha_of[gen])}});
  return {GAlgebra::make(ring, g, std::move(maps)), coords, std::move(alphas), std::move(alpha_of)};
}

BasicBAlpha build_balpha(const FieldPtr& k, std::vector<FieldElement> alphas) {
  if (alphas.empty()) throw std::invalid_argument("build_balpha: no alphas");
  auto [g, coords] = group_elemab(k->p(), static_cast<unsigned>(alphas.size()));
  return build_balpha(k, g, coords, std::move(alphas));
}

AlgebraMorphism build_theta(const BasicBAlpha& b, const MhoAlgebra& m) {
  require_same(b.base, m.base, "build_theta");
  const RingPtr& target = m.base.ring();
  Polynomial img(target);
  for (std::size_t i = 0; i < b.alphas.size(); ++i)
    img += Polynomial::variable(target, i).scale(b.alphas[i].code());
  AlgebraMorphism out{VarMap{b.base.ring(), target, {img}}, false};
  out.equivariant = is_equivariant(b.base, m.base, out.map);
  return out;
}

AlgebraMorphism build_psi(const MhoAlgebra& m, const BasicBAlpha& b) {
  require_same(b.base, m.base, "build_psi");
  const MooreSystem sys = moore_inverse(b.alphas);
  const RingPtr& target = b.base.ring();
  AlgebraMorphism out{VarMap{m.base.ring(), target, {}}, false};
  for (const auto& row : *sys.inverse) out.map.images.push_back(linearized(target, 0, row));
  out.equivariant = is_equivariant(m.base, b.base, out.map);
  return out;
}

LinearizedMap build_L(const BasicBAlpha& balpha, const BasicBAlpha& bbeta) {
  require_same(balpha.base, bbeta.base, "build_L");
  if (balpha.alphas.size() != bbeta.alphas.size()) throw std::invalid_argument("build_L: rank mismatch");
  // f_i(beta_k) = delta_ik, so lambda = sum_i alpha_i f_i solves the system.
  const MooreSystem sys = moore_inverse(bbeta.alphas);
  const FieldPtr& k = balpha.base.field();
  const std::size_t n = balpha.alphas.size();
  std::vector<FieldElement> lambdas(n, FieldElement::zero(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lambdas[j] += balpha.alphas[i] * (*sys.inverse)[i][j];
  const RingPtr& target = bbeta.base.ring();
  LinearizedMap out{AlgebraMorphism{VarMap{balpha.base.ring(), target, {linearized(target, 0, lambdas)}}, false},
                    lambdas};
  out.morphism.equivariant = is_equivariant(balpha.base, bbeta.base, out.morphism.map);
  return out;
}

BigTheta build_big_theta(const std::vector<std::vector<FieldElement>>& alpha_family, const MhoAlgebra& m) {
  const FieldPtr& k = m.base.field();
  const std::size_t n = m.coords.rank;
  const std::size_t count = alpha_family.size();
  if (count == 0) throw std::invalid_argument("build_big_theta: empty family");
  for (const auto& alphas : alpha_family) {
    if (alphas.size() != n) throw std::invalid_argument("build_big_theta: embedding of the wrong rank");
    for (const auto& a : alphas)
      if (!a.ctx()->same_field(*k)) throw ContextMismatch("build_big_theta: alpha from another field");
    if (!fp_independent(alphas)) throw std::invalid_argument("build_big_theta: dependent embedding");
  }
  std::vector<std::string> names;
  for (std::size_t s = 0; s < count; ++s) names.push_back("Z" + std::to_string(s + 1));
  const RingPtr ring = Ring::create(k, names);
  const GroupPtr& g = m.base.group();
  std::vector<VarMap> maps;
  for (auto gen : g->gens()) {
    VarMap vm{ring, ring, {}};
    for (std::size_t s = 0; s < count; ++s)
      vm.images.push_back(Polynomial::variable(ring, s) -
                          Polynomial::constant(ring, combine(k, m.coords.coords[gen], alpha_family[s])));
    maps.push_back(std::move(vm));
  }
  BigTheta out{GAlgebra::make(ring, g, std::move(maps)), AlgebraMorphism{VarMap{ring, m.base.ring(), {}}, false},
               std::nullopt};
  const RingPtr& target = m.base.ring();
  for (std::size_t s = 0; s < count; ++s) {
    Polynomial img(target);
    for (std::size_t j = 0; j < n; ++j) img += Polynomial::variable(target, j).scale(alpha_family[s][j].code());
    out.theta.map.images.push_back(std::move(img));
  }
  out.theta.equivariant = is_equivariant(out.source, m.base, out.theta.map);

  if (count != n) return out;
  FqMatrix a(k, n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j) a.at(s, j) = alpha_family[s][j].code();
  const auto ainv = inverse(a);
  if (!ainv) return out;
  // theta(Z) = A Y, so Y = A^{-1} theta(Z).
  VarMap back{target, ring, {}};
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img(ring);
    for (std::size_t s = 0; s < n; ++s) img += Polynomial::variable(ring, s).scale(ainv->at(j, s));
    back.images.push_back(std::move(img));
  }
  if (compose_maps(out.theta.map, back) == VarMap::identity(ring) &&
      compose_maps(back, out.theta.map) == VarMap::identity(target))
    out.inverse = std::move(back);
  return out;
}

GAlgebra build_cp2_example(const FieldPtr& k) {
  const unsigned p = k->p();
  const GroupPtr g = group_cyclic(p, 2, GroupCaps{std::max<std::size_t>(27, std::size_t{p} * p)});
  const RingPtr ring = Ring::create(k, {"x", "y"});
  const Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
  VarMap m{ring, ring, {x + y.pow(p - 1), y - Polynomial::constant(ring, 1)}};
  return GAlgebra::make(ring, g, {m});
}

bool is_reflexive_point(const DkAlgebra& dk, const Polynomial& w) {
  return is_reflexive_point(dk.base, dk.var_element, w);
}

AlgebraMorphism morphism_from_point(const DkAlgebra& dk, const GAlgebra& target, const PointCert& a) {
  return morphism_from_point(dk.base, dk.var_element, target, a);
}

}  // namespace modinv
