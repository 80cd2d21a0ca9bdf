#include "modinv/galgebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modinv/linalg.hpp"

namespace modinv {

GAlgebra GAlgebra::make(RingPtr ring, GroupPtr group, std::vector<VarMap> gen_maps) {
  if (!ring || !group) throw std::invalid_argument("make_galgebra: missing ring or group");
  if (gen_maps.size() != group->gens().size())
    throw std::invalid_argument("make_galgebra: expected " + std::to_string(group->gens().size()) +
                                " generator assignments, got " + std::to_string(gen_maps.size()));
  for (auto& m : gen_maps) {
    if (!m.source->same_vars(*ring) || !m.target->same_vars(*ring))
      throw RingMismatch("make_galgebra: generator map is not an endomorphism of the ring");
    validate(m);
    m.source = ring;
    m.target = ring;
    for (auto& img : m.images) img = img.reorder(ring);
  }
  if (group->p() != 0 && group->order() > 1 && group->p() != ring->field()->p())
    throw std::invalid_argument("make_galgebra: group is a " + std::to_string(group->p()) +
                                "-group but the field has characteristic " + std::to_string(ring->field()->p()));

  GAlgebra a;
  a.ring_ = ring;
  a.group_ = group;
  a.gen_maps_ = std::move(gen_maps);

  const std::size_t n = group->order();
  std::vector<std::optional<VarMap>> maps(n);
  maps[0] = VarMap::identity(ring);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < group->gens().size(); ++k) {
      const std::size_t next = group->mul(e, group->gens()[k]);
      if (maps[next]) continue;
      maps[next] = compose_maps(*maps[e], a.gen_maps_[k]);
      queue.push_back(next);
    }
  }
  for (auto& m : maps) a.elem_maps_.push_back(std::move(*m));

  const auto& names = group->names();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const VarMap& gh = a.elem_maps_[group->mul(g, h)];
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        const Polynomial lhs = apply_map(a.elem_maps_[h], a.elem_maps_[g].images[v]);
        if (lhs == gh.images[v]) continue;
        std::ostringstream os;
        os << "action violates the group law at (" << ring->vars()[v] << ", " << names[g] << ", " << names[h]
           << "): ((" << ring->vars()[v] << ")" << names[g] << ")" << names[h] << " = " << lhs.to_string()
           << " but (" << ring->vars()[v] << ")(" << names[g] << "*" << names[h] << ") = " << gh.images[v].to_string();
        throw ActionError(os.str(), ring->vars()[v], g, h);
      }
    }
  return a;
}

GAlgebra GAlgebra::from_left_action(RingPtr ring, GroupPtr group, std::vector<VarMap> gen_maps) {
  // (f)g := g^{-1} f, and g^{-1} = g^(ord(g) - 1).
  for (std::size_t k = 0; k < gen_maps.size() && k < group->gens().size(); ++k) {
    const std::size_t ord = group->element_order(group->gens()[k]);
    VarMap inv = VarMap::identity(ring);
    for (std::size_t i = 1; i < ord; ++i) inv = compose_maps(inv, gen_maps[k]);
    gen_maps[k] = std::move(inv);
  }
  return make(std::move(ring), std::move(group), std::move(gen_maps));
}

Polynomial GAlgebra::act(const Polynomial& f, std::size_t g) const { return apply_map(elem_maps_.at(g), f); }

std::vector<Polynomial> GAlgebra::orbit(const Polynomial& f) const {
  std::vector<Polynomial> out;
  out.reserve(elem_maps_.size());
  for (const auto& m : elem_maps_) out.push_back(apply_map(m, f));
  return out;
}

Polynomial GAlgebra::trace(const Polynomial& f) const {
  std::vector<Term> acc;
  for (const auto& m : elem_maps_) {
    const Polynomial img = apply_map(m, f);
    acc.insert(acc.end(), img.terms().begin(), img.terms().end());
  }
  return Polynomial::from_terms(ring_, std::move(acc));
}

bool GAlgebra::is_invariant(const Polynomial& f) const {
  for (const auto& m : gen_maps_)
    if (!(apply_map(m, f) == f)) return false;
  return true;
}

std::optional<PointCert> certify_point(const GAlgebra& a, const Polynomial& f) {
  auto orbit = a.orbit(f);
  Polynomial tr(a.ring());
  for (const auto& x : orbit) tr += x;
  if (!(tr == Polynomial::constant(a.ring(), 1))) return std::nullopt;
  return PointCert{f.reorder(a.ring()), std::move(orbit)};
}

std::optional<PointCert> find_point(const GAlgebra& a, unsigned deg_bound) {
  const RingPtr& ring = a.ring();
  const FieldCtx& k = *ring->field();
  std::map<Monomial, Polynomial> traces;
  for (unsigned d = 1; d <= deg_bound; ++d) {
    auto monos = monomials_up_to(ring->nvars(), d);
    // Highest monomial first, so pivots (and the returned point) prefer
    // top-degree terms and free lower terms are set to zero.
    std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return ring->compare(x, y) > 0; });
    std::vector<Polynomial> cols;
    std::set<Monomial> row_set{Monomial(ring->nvars(), 0)};
    for (const auto& m : monos) {
      auto it = traces.find(m);
      if (it == traces.end()) it = traces.emplace(m, a.trace(Polynomial::monomial(ring, m))).first;
      cols.push_back(it->second);
      for (const auto& t : it->second.terms()) row_set.insert(t.mono);
    }
    std::vector<Monomial> rows(row_set.begin(), row_set.end());
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    FqMatrix m(ring->field(), rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& t : cols[j].terms()) m.at(row_of[t.mono], j) = t.coeff;
    std::vector<FqMatrix::Code> rhs(rows.size(), 0);
    rhs[row_of[Monomial(ring->nvars(), 0)]] = k.one();
    const auto sol = solve(m, rhs);
    if (!sol) continue;
    std::vector<Term> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if ((*sol)[j]) terms.push_back({monos[j], (*sol)[j]});
    auto cert = certify_point(a, Polynomial::from_terms(ring, std::move(terms)));
    if (!cert) throw std::logic_error("find_point: solved system does not give a point");
    return cert;
  }
  return std::nullopt;
}

std::optional<TriangularCert> is_triangular(const GAlgebra& a, const std::vector<std::size_t>& var_order) {
  const std::size_t n = a.ring()->nvars();
  std::vector<std::size_t> sorted = var_order;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == n;
  for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i;
  if (!perm) throw std::invalid_argument("is_triangular: not a permutation of the variables");
  TriangularCert cert{var_order, {}};
  for (const auto& gm : a.generator_maps()) {
    std::vector<Polynomial> offs;
    std::vector<bool> allowed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t v = var_order[i];
      Polynomial off = gm.images[v] - Polynomial::variable(a.ring(), v);
      for (std::size_t w = 0; w < n; ++w)
        if (!allowed[w] && off.uses_var(w)) return std::nullopt;
      offs.push_back(std::move(off));
      allowed[v] = true;
    }
    cert.offsets.push_back(std::move(offs));
  }
  return cert;
}

std::optional<TriangularCert> find_triangular_order(const GAlgebra& a, std::size_t max_vars) {
  const std::size_t n = a.ring()->nvars();
  if (n > max_vars) return std::nullopt;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (auto c = is_triangular(a, order)) return c;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

bool is_equivariant(const GAlgebra& source, const GAlgebra& target, const VarMap& m) {
  if (!(*source.group() == *target.group())) return false;
  if (!m.source->same_vars(*source.ring()) || !m.target->same_vars(*target.ring())) return false;
  for (std::size_t k = 0; k < source.generator_maps().size(); ++k)
    for (std::size_t v = 0; v < source.ring()->nvars(); ++v) {
      const Polynomial lhs = apply_map(m, source.generator_maps()[k].images[v]);
      const Polynomial rhs = apply_map(target.generator_maps()[k], m.images[v]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool is_reflexive_point(const GAlgebra& dk, const std::vector<std::size_t>& var_element, const Polynomial& w) {
  if (var_element.size() != dk.ring()->nvars()) throw std::invalid_argument("is_reflexive_point: variable map size");
  if (!certify_point(dk, w)) throw std::invalid_argument("is_reflexive_point: " + w.to_string() + " is not a point");
  VarMap theta{dk.ring(), dk.ring(), {}};
  for (auto g : var_element) theta.images.push_back(dk.act(w, g));
  return apply_map(theta, w) == w;
}

AlgebraMorphism morphism_from_point(const GAlgebra& dk, const std::vector<std::size_t>& var_element,
                                    const GAlgebra& target, const PointCert& a) {
  if (var_element.size() != dk.ring()->nvars()) throw std::invalid_argument("morphism_from_point: variable map size");
  if (!certify_point(target, a.element))
    throw std::invalid_argument("morphism_from_point: " + a.element.to_string() + " is not a point");
  AlgebraMorphism out{VarMap{dk.ring(), target.ring(), {}}, false};
  for (auto g : var_element) out.map.images.push_back(target.act(a.element, g));
  out.equivariant = is_equivariant(dk, target, out.map);
  return out;
}

std::vector<std::string> disjoint_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> used(a.begin(), a.end());
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    std::string cand = name;
    for (int suffix = 2; used.count(cand); ++suffix) cand = name + "_" + std::to_string(suffix);
    used.insert(cand);
    out.push_back(cand);
  }
  return out;
}

namespace {

// Images of a's generator map embedded at offset, with the rest fixed.
VarMap embed_factor(const RingPtr& ring, const VarMap* gm, std::size_t offset, std::size_t count,
                    const VarMap* other, std::size_t other_offset, std::size_t other_count) {
  VarMap m = VarMap::identity(ring);
  auto place = [&](const VarMap* src, std::size_t off, std::size_t cnt) {
    if (!src) return;
    std::vector<std::size_t> idx(cnt);
    std::iota(idx.begin(), idx.end(), off);
    for (std::size_t i = 0; i < cnt; ++i) m.images[off + i] = src->images[i].remap(ring, idx);
  };
  place(gm, offset, count);
  place(other, other_offset, other_count);
  return m;
}

}  // namespace

GAlgebra tensor(const GAlgebra& a, const GAlgebra& b) {
  if (!a.field()->same_field(*b.field())) throw ContextMismatch("tensor: algebras over different fields");
  const std::size_t na = a.ring()->nvars(), nb = b.ring()->nvars();
  const RingPtr ring =
      Ring::create(a.field(), disjoint_names(a.ring()->vars(), b.ring()->vars()), a.ring()->order());
  const GroupPtr g = group_product(*a.group(), *b.group(), GroupCaps{a.group()->order() * b.group()->order()});
  std::vector<VarMap> maps;
  for (const auto& gm : a.generator_maps()) maps.push_back(embed_factor(ring, &gm, 0, na, nullptr, 0, 0));
  for (const auto& gm : b.generator_maps()) maps.push_back(embed_factor(ring, &gm, na, nb, nullptr, 0, 0));
  return GAlgebra::make(ring, g, std::move(maps));
}

SameSideTensor same_side_tensor(const GAlgebra& a, const GAlgebra& b) {
  if (!a.field()->same_field(*b.field())) throw ContextMismatch("same_side_tensor: algebras over different fields");
  if (!(*a.group() == *b.group())) throw std::invalid_argument("same_side_tensor: algebras over different groups");
  const std::size_t na = a.ring()->nvars(), nb = b.ring()->nvars();
  const RingPtr ring =
      Ring::create(a.field(), disjoint_names(a.ring()->vars(), b.ring()->vars()), a.ring()->order());
  std::vector<VarMap> maps;
  for (std::size_t k = 0; k < a.generator_maps().size(); ++k)
    maps.push_back(embed_factor(ring, &a.generator_maps()[k], 0, na, &b.generator_maps()[k], na, nb));
  VarMap ia{a.ring(), ring, {}}, ib{b.ring(), ring, {}};
  for (std::size_t i = 0; i < na; ++i) ia.images.push_back(Polynomial::variable(ring, i));
  for (std::size_t j = 0; j < nb; ++j) ib.images.push_back(Polynomial::variable(ring, na + j));
  return {GAlgebra::make(ring, a.group(), std::move(maps)), std::move(ia), std::move(ib)};
}

}  // namespace modinv
