#include "modinv/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "modinv/groebner.hpp"
#include "modinv/linalg.hpp"

namespace modinv {

namespace {

// Coefficient matrix of `polys` (one column each) over the monomials they use.
FqMatrix coefficient_matrix(const FieldPtr& k, const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::size_t> row_of;
  for (const auto& f : polys)
    for (const auto& t : f.terms()) row_of.emplace(t.mono, row_of.size());
  FqMatrix m(k, row_of.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (const auto& t : polys[c].terms()) m.at(row_of.at(t.mono), c) = t.coeff;
  return m;
}

std::size_t poly_rank(const FieldPtr& k, const std::vector<Polynomial>& polys) {
  if (polys.empty()) return 0;
  return rank(coefficient_matrix(k, polys));
}

bool by_degree(const Polynomial& a, const Polynomial& b) {
  const unsigned da = a.is_zero() ? 0 : a.total_degree(), db = b.is_zero() ? 0 : b.total_degree();
  if (da != db) return da < db;
  return compare(a, b) < 0;
}

unsigned default_point_bound(const GAlgebra& a) {
  return static_cast<unsigned>(std::max<std::size_t>(1, a.group()->order()));
}

}  // namespace

InvariantBasis invariants_bruteforce(const GAlgebra& a, unsigned d) {
  const RingPtr& ring = a.ring();
  const FieldCtx& k = *ring->field();
  std::vector<Monomial> cols = monomials_up_to(ring->nvars(), d);
  std::sort(cols.begin(), cols.end(), [&](const Monomial& x, const Monomial& y) { return ring->compare(x, y) < 0; });

  // (m)g - m for every column monomial and generator, stacked vertically.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, FieldCtx::Code>>> entries;  // per row: (col, coeff)
  for (std::size_t gi = 0; gi < a.generator_maps().size(); ++gi) {
    const VarMap& gm = a.generator_maps()[gi];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Polynomial m = Polynomial::monomial(ring, cols[c]);
      const Polynomial diff = apply_map(gm, m) - m;
      for (const auto& t : diff.terms()) {
        auto [it, fresh] = row_of.emplace(std::make_pair(gi, t.mono), entries.size());
        if (fresh) entries.emplace_back();
        entries[it->second].push_back({c, t.coeff});
      }
    }
  }
  FqMatrix mat(ring->field(), entries.size(), cols.size());
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& [c, v] : entries[r]) mat.at(r, c) = k.add(mat.at(r, c), v);

  InvariantBasis out{ring, d, {}};
  for (const auto& v : nullspace(mat)) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (v[c] != 0) terms.push_back({cols[c], v[c]});
    out.basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  std::sort(out.basis.begin(), out.basis.end(), by_degree);
  return out;
}

std::string format_invariants(const InvariantBasis& b) {
  std::ostringstream os;
  for (const auto& f : b.basis) os << "INV " << f.total_degree() << " " << f.to_string() << "\n";
  return os.str();
}

ErasureCert erasure_lambdas(const GAlgebra& a, const PointCert& point, const GAlgebra& gamma,
                            const TriangularCert& cert) {
  if (!certify_point(a, point.element))
    throw std::invalid_argument("erasure_lambdas: " + point.element.to_string() + " is not a point of A");
  if (cert.var_order.size() != gamma.ring()->nvars() || !is_triangular(gamma, cert.var_order))
    throw std::invalid_argument("erasure_lambdas: Gamma is not triangular in the given order");

  SameSideTensor st = same_side_tensor(a, gamma);
  const GAlgebra& t = st.algebra;
  const RingPtr& tr = t.ring();
  const std::size_t na = a.ring()->nvars(), nt = cert.var_order.size();
  ErasureCert out{st, apply_map(st.inject_a, point.element), {}, {}, nullptr, {}};
  for (auto v : cert.var_order) out.t_vars.push_back(na + v);

  std::vector<std::string> lnames;
  for (std::size_t i = 0; i < nt; ++i) lnames.push_back("L" + std::to_string(i + 1));
  out.rewrite_ring = Ring::create(a.field(), disjoint_names(a.ring()->vars(), lnames));
  const RingPtr& rw = out.rewrite_ring;

  // position of each tensor variable in the triangular order (nt = A part)
  std::vector<std::size_t> pos(tr->nvars(), nt);
  for (std::size_t i = 0; i < nt; ++i) pos[out.t_vars[i]] = i;

  VarMap substitute{rw, tr, {}};  // L_j -> lambda_j, A fixed
  for (std::size_t v = 0; v < na; ++v) substitute.images.push_back(Polynomial::variable(tr, v));

  for (std::size_t i = 0; i < nt; ++i) {
    const Polynomial ti = Polynomial::variable(tr, out.t_vars[i]);
    Polynomial lambda = t.trace(out.point * ti);
    if (!t.is_invariant(lambda))
      throw std::runtime_error("erasure_lambdas: lambda_" + std::to_string(i + 1) + " is not invariant");
    const Polynomial rest = ti - lambda;
    VarMap to_rw{tr, rw, {}};
    for (std::size_t v = 0; v < tr->nvars(); ++v) {
      if (v < na) {
        to_rw.images.push_back(Polynomial::variable(rw, v));
      } else if (pos[v] < i) {
        to_rw.images.push_back(out.rewrites[pos[v]]);
      } else {
        if (rest.uses_var(v))
          throw std::runtime_error("erasure_lambdas: T_" + std::to_string(i + 1) + " - lambda_" +
                                   std::to_string(i + 1) + " involves " + tr->vars()[v]);
        to_rw.images.push_back(Polynomial(rw));
      }
    }
    Polynomial rewrite = Polynomial::variable(rw, na + i) + apply_map(to_rw, rest);
    substitute.images.push_back(lambda);
    out.lambdas.push_back(std::move(lambda));
    out.rewrites.push_back(std::move(rewrite));
  }
  for (std::size_t i = 0; i < nt; ++i)
    if (apply_map(substitute, out.rewrites[i]) != Polynomial::variable(tr, out.t_vars[i]))
      throw std::runtime_error("erasure_lambdas: rewrite of T_" + std::to_string(i + 1) + " does not reconstruct it");
  return out;
}

EliminationResult invariant_ring_elimination(const GAlgebra& s, unsigned d_check, unsigned point_bound) {
  const FieldPtr& k = s.field();
  const GroupPtr& g = s.group();
  if (g->order() <= 1) throw std::invalid_argument("invariant_ring_elimination: the group is trivial");
  const auto coords = elemab_coords(*g);
  if (!coords) throw std::invalid_argument("invariant_ring_elimination: the group is not elementary abelian");
  const unsigned p = k->p();
  const std::size_t n = coords->rank;
  if (d_check == 0) d_check = static_cast<unsigned>(p * n);
  const auto a = find_point(s, point_bound ? point_bound : default_point_bound(s));
  if (!a) throw std::invalid_argument("invariant_ring_elimination: no point of S found");
  if (!find_triangular_order(s)) throw std::invalid_argument("invariant_ring_elimination: S is not triangular");

  const MhoAlgebra mho = build_mho(k, g, *coords);
  const auto b = find_point(mho.base, static_cast<unsigned>(n * (p - 1)));
  if (!b) throw std::logic_error("invariant_ring_elimination: Mho has no point");
  const SameSideTensor st = same_side_tensor(s, mho.base);
  const GAlgebra& t = st.algebra;
  const RingPtr& tr = t.ring();
  const std::size_t ns = s.ring()->nvars();
  const Polynomial at = apply_map(st.inject_a, a->element), bt = apply_map(st.inject_b, b->element);

  // S erases Mho: lambda_i = tr(a Y_i) = Y_i - c_i with c_i in S.
  std::vector<Polynomial> lambdas;
  for (std::size_t i = 0; i < n; ++i) lambdas.push_back(t.trace(at * Polynomial::variable(tr, ns + i)));
  // Mho erases S, so (S (x) Mho)^G = Mho^G[mu] with Mho^G = k[Y_i^p - Y_i].
  std::vector<Polynomial> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial y = Polynomial::variable(tr, ns + i);
    candidates.push_back(y.pow(p) - y);
  }
  for (std::size_t j = 0; j < ns; ++j) candidates.push_back(t.trace(bt * Polynomial::variable(tr, j)));

  // Lex with the Mho variables on top: reducing modulo the lambdas
  // eliminates Y and realizes the projection onto S.
  std::vector<std::string> names;
  std::vector<std::size_t> to_lex(tr->nvars()), to_s(tr->nvars(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    to_lex[ns + i] = names.size();
    names.push_back(tr->vars()[ns + i]);
  }
  for (std::size_t j = 0; j < ns; ++j) {
    to_lex[j] = names.size();
    to_s[n + j] = j;
    names.push_back(tr->vars()[j]);
  }
  const RingPtr lex = Ring::create(k, names, MonomialOrder::lex);
  std::vector<Polynomial> rel;
  for (const auto& l : lambdas) rel.push_back(l.remap(lex, to_lex));
  const GBasis gb = groebner(rel, MonomialOrder::lex);

  std::vector<Polynomial> gens;
  for (const auto& c : candidates) {
    Polynomial nf = normal_form(c.remap(lex, to_lex), gb);
    for (std::size_t i = 0; i < n; ++i)
      if (nf.uses_var(i)) throw std::logic_error("invariant_ring_elimination: projection left a Mho variable");
    Polynomial f = nf.remap(s.ring(), to_s);
    f -= Polynomial::constant(s.ring(), f.constant_term());
    if (f.is_zero()) continue;
    f = f.monic();
    if (std::find(gens.begin(), gens.end(), f) == gens.end()) gens.push_back(std::move(f));
  }
  std::sort(gens.begin(), gens.end(), by_degree);
  // Drop generators that are polynomials in the others, largest first.
  for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (subalgebra_membership(gens[i], others).member) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  for (const auto& f : gens)
    if (!s.is_invariant(f))
      throw std::logic_error("invariant_ring_elimination: output " + f.to_string() + " is not invariant");

  EliminationResult out{gens, d_check, {}};
  const InvariantBasis oracle = invariants_bruteforce(s, d_check);
  if (gens.empty()) {
    for (const auto& f : oracle.basis)
      if (!f.is_constant()) out.unexplained.push_back(f);
    return out;
  }
  const SubalgebraMembership sm(gens);
  for (const auto& f : oracle.basis)
    if (!f.is_constant() && !sm.test(f).member) out.unexplained.push_back(f);
  return out;
}

ArtinSchreier artin_schreier_gens(const MhoAlgebra& m) {
  const RingPtr& ring = m.base.ring();
  const unsigned p = ring->field()->p();
  ArtinSchreier out;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const Polynomial y = Polynomial::variable(ring, i);
    Polynomial f = y.pow(p) - y;
    if (!m.base.is_invariant(f)) throw std::logic_error("artin_schreier_gens: " + f.to_string() + " not invariant");
    out.generators.push_back(std::move(f));
  }
  // Products of two or more generators exceed degree p, so the candidate
  // span at degree p is {1} together with the generators.
  std::vector<Polynomial> span{Polynomial::constant(ring, 1)};
  span.insert(span.end(), out.generators.begin(), out.generators.end());
  const InvariantBasis oracle = invariants_bruteforce(m.base, p);
  std::vector<Polynomial> both = span;
  both.insert(both.end(), oracle.basis.begin(), oracle.basis.end());
  const FieldPtr& k = ring->field();
  const std::size_t r = poly_rank(k, span);
  out.spans_degree_p = r == span.size() && r == oracle.basis.size() && poly_rank(k, both) == r;
  return out;
}

namespace {

struct EmbeddedPoly {
  std::vector<std::pair<FieldCtx::Code, Monomial>> terms;
};

FieldCtx::Code eval(const FieldCtx& big, const EmbeddedPoly& f, const std::vector<FieldCtx::Code>& pt) {
  FieldCtx::Code acc = 0;
  for (const auto& [c, m] : f.terms) {
    FieldCtx::Code v = c;
    for (std::size_t i = 0; i < m.size() && v != 0; ++i)
      if (m[i]) v = big.mul(v, big.pow(pt[i], m[i]));
    acc = big.add(acc, v);
  }
  return acc;
}

}  // namespace

FreenessReport freeness_on_points(const GAlgebra& a, unsigned max_tower, std::size_t cap) {
  const FieldPtr& k = a.field();
  const GroupPtr& g = a.group();
  const RingPtr& ring = a.ring();
  const std::size_t nv = ring->nvars(), order = g->order();
  constexpr std::size_t max_witnesses = 8;
  FreenessReport rep;

  // Exact criterion over the algebraic closure: g has no fixed point iff
  // the ideal generated by the (v)g - v is the unit ideal.
  rep.ideals_unit = order > 1;
  for (std::size_t e = 1; e < order && rep.ideals_unit; ++e) {
    std::vector<Polynomial> moved;
    for (std::size_t v = 0; v < nv; ++v) moved.push_back(a.element_map(e).images[v] - Polynomial::variable(ring, v));
    const GBasis gb = groebner(moved, MonomialOrder::grevlex);
    rep.ideals_unit = gb.gens.size() == 1 && gb.gens[0].is_constant();
  }

  for (unsigned m = 1; m <= max_tower; ++m) {
    const unsigned s = k->s() * m;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) q *= k->p();
    if (q > (1u << 16)) {
      rep.partial = true;
      break;
    }
    const FieldPtr big = FieldCtx::create(k->p(), s, std::nullopt, FieldCaps{std::max(13u, k->p()), q});
    // A root of k's modulus in the big field carries t.
    FieldCtx::Code root = 0;
    bool found = false;
    for (FieldCtx::Code x = 0; x < big->q() && !found; ++x) {
      FieldCtx::Code acc = 0;
      for (std::size_t i = k->modulus().size(); i-- > 0;)
        acc = big->add(big->mul(acc, x), big->from_int(k->modulus()[i]));
      if (acc == 0) {
        root = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("freeness_on_points: modulus has no root in the extension");
    auto embed = [&](FieldCtx::Code c) {
      const auto cs = k->coeffs(c);
      FieldCtx::Code acc = 0;
      for (std::size_t i = cs.size(); i-- > 0;) acc = big->add(big->mul(acc, root), big->from_int(cs[i]));
      return acc;
    };
    std::vector<std::vector<EmbeddedPoly>> images(order);
    for (std::size_t e = 1; e < order; ++e)
      for (const auto& img : a.element_map(e).images) {
        EmbeddedPoly ep;
        for (const auto& t : img.terms()) ep.terms.push_back({embed(t.coeff), t.mono});
        images[e].push_back(std::move(ep));
      }

    std::vector<FieldCtx::Code> pt(nv, 0);
    std::size_t checked = 0;
    bool done = false;
    while (!done) {
      if (checked == cap) {
        rep.partial = true;
        break;
      }
      ++checked;
      for (std::size_t e = 1; e < order; ++e) {
        bool moved = false;
        for (std::size_t v = 0; v < nv && !moved; ++v) moved = eval(*big, images[e][v], pt) != pt[v];
        if (!moved && rep.witnesses.size() < max_witnesses) {
          FreenessWitness w{m, {}, e};
          for (auto c : pt) w.point.push_back(big->format(c));
          rep.witnesses.push_back(std::move(w));
        }
      }
      // mixed-radix increment
      std::size_t i = 0;
      while (i < nv && ++pt[i] == big->q()) pt[i++] = 0;
      done = i == nv;
    }
    rep.points_checked += checked;
  }
  rep.free = rep.witnesses.empty() && (!rep.partial || rep.ideals_unit);
  return rep;
}

std::string format_freeness(const GAlgebra& a, const FreenessReport& r) {
  std::ostringstream os;
  os << "free " << (r.free ? "yes" : "no") << "\n";
  os << "partial " << (r.partial ? "yes" : "no") << "\n";
  os << "points " << r.points_checked << "\n";
  os << "unit-ideals " << (r.ideals_unit ? "yes" : "no") << "\n";
  for (const auto& w : r.witnesses) {
    os << "WITNESS (";
    for (std::size_t i = 0; i < w.point.size(); ++i) os << (i ? "," : "") << w.point[i];
    os << ") " << a.group()->names()[w.element] << "\n";
  }
  return os.str();
}

FreeBasisReport free_basis_check(const GAlgebra& a, const Polynomial& point, unsigned d) {
  const InvariantBasis inv = invariants_bruteforce(a, d);
  const std::vector<Polynomial> orbit = a.orbit(point);
  std::vector<Polynomial> cols;
  for (const auto& og : orbit)
    for (const auto& b : inv.basis) cols.push_back(b * og);
  return {cols.size(), poly_rank(a.field(), cols)};
}

}  // namespace modinv
