#include "modinv/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace modinv {

namespace {

// p - c * m * g on sorted term lists (descending), dropping cancellations.
std::vector<Term> sub_scaled(const Ring& r, const std::vector<Term>& p, const std::vector<Term>& g,
                             const Monomial& m, FieldCtx::Code c) {
  const FieldCtx& k = *r.field();
  const FieldCtx::Code nc = k.neg(c);
  std::vector<Term> out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have = false;
  auto load = [&] {
    if (j < g.size()) {
      gm = mono_mul(g[j].mono, m);
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < p.size() || have) {
    if (!have) {
      out.push_back(p[i++]);
      continue;
    }
    const int cmp = i < p.size() ? r.compare(p[i].mono, gm) : -1;
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, k.mul(nc, g[j].coeff)});
      ++j;
      load();
    } else {
      const auto s = k.add(p[i].coeff, k.mul(nc, g[j].coeff));
      if (s != 0) out.push_back({p[i].mono, s});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

Polynomial reduce_terms(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  const Ring& r = *f.ring();
  const FieldCtx& k = *r.field();
  std::vector<Term> p = f.terms();
  std::vector<Term> rem;
  // p is consumed from the front; `start` marks the live prefix offset.
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& lt = p[start];
    const Polynomial* hit = nullptr;
    for (const auto* g : divisors)
      if (divides(g->leading().mono, lt.mono)) {
        hit = g;
        break;
      }
    if (!hit) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Monomial m = mono_div(lt.mono, hit->leading().mono);
    const auto c = k.div(lt.coeff, hit->leading().coeff);
    std::vector<Term> live(p.begin() + static_cast<std::ptrdiff_t>(start), p.end());
    p = sub_scaled(r, live, hit->terms(), m, c);
    start = 0;
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  const Monomial l = mono_lcm(a.leading().mono, b.leading().mono);
  const FieldCtx& k = *a.ring()->field();
  const Polynomial x = a.mul_term(mono_div(l, a.leading().mono), k.inv(a.leading().coeff));
  const Polynomial y = b.mul_term(mono_div(l, b.leading().mono), k.inv(b.leading().coeff));
  return x - y;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  std::vector<const Polynomial*> ds;
  for (const auto& d : divisors) {
    require_same_ring(*f.ring(), *d.ring(), "reduce");
    if (!d.is_zero()) ds.push_back(&d);
  }
  return reduce_terms(f, ds);
}

GBasis groebner(std::span<const Polynomial> gens, MonomialOrder order) {
  if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
  const RingPtr ring = gens.front().ring()->with_order(order);
  const Ring& r = *ring;
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.ring()->same_vars(r)) throw RingMismatch("groebner: generators from different rings");
    Polynomial h = g.reorder(ring);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {ring, {Polynomial::constant(ring, 1)}};
    basis.push_back(h.monic());
  }
  if (basis.empty()) return {ring, {}};

  // Pending pairs (i, j), i < j.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lcm_of = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return mono_lcm(basis[pr.first].leading().mono, basis[pr.second].leading().mono);
  };

  while (!pending.empty()) {
    // Normal selection: smallest lcm; ties resolved by the pair's position.
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(*it);
      if (r.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const auto& li = basis[i].leading().mono;
    const auto& lj = basis[j].leading().mono;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].leading().mono, best_lcm)) continue;
      const auto ik = std::minmax(i, k), jk = std::minmax(j, k);
      chain = !pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second});
    }
    if (chain) continue;

    Polynomial h = reduce(spoly(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {ring, {Polynomial::constant(ring, 1)}};
    const std::size_t n = basis.size();
    basis.push_back(h.monic());
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading().mono;
      const auto& lj = basis[j].leading().mono;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    // The leading term is not divisible by any other leading term, so only
    // the tail changes.
    reduced.push_back(reduce_terms(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return r.compare(a.leading().mono, b.leading().mono) > 0;
  });
  return {ring, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& f, const GBasis& gb) {
  return reduce(f.reorder(gb.ring), gb.gens);
}

bool ideal_member(const Polynomial& f, const GBasis& gb) { return normal_form(f, gb).is_zero(); }

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> keep) {
  if (gens.empty()) return {};
  const RingPtr& src = gens.front().ring();
  const std::size_t n = src->nvars();
  std::vector<bool> kept(n, false);
  for (auto i : keep) {
    if (i >= n) throw std::out_of_range("eliminate: keep index out of range");
    kept[i] = true;
  }
  // Eliminated variables first, then kept ones, in lex.
  std::vector<std::string> names;
  std::vector<std::size_t> to_new(n), to_old;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < n; ++i)
      if (kept[i] == (pass == 1)) {
        to_new[i] = names.size();
        to_old.push_back(i);
        names.push_back(src->vars()[i]);
      }
  const RingPtr elim = Ring::create(src->field(), names, MonomialOrder::lex);
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(g.remap(elim, to_new));
  const GBasis gb = groebner(moved, MonomialOrder::lex);
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    bool only_kept = true;
    for (std::size_t v = 0; v < n && only_kept; ++v)
      if (!kept[to_old[v]] && g.uses_var(v)) only_kept = false;
    if (only_kept) out.push_back(g.remap(src, to_old));
  }
  return out;
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const std::string> keep) {
  if (gens.empty()) return {};
  std::vector<std::size_t> idx;
  for (const auto& name : keep) {
    const auto i = gens.front().ring()->index_of(name);
    if (!i) throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    idx.push_back(*i);
  }
  return eliminate(gens, std::span<const std::size_t>(idx));
}

SubalgebraMembership::SubalgebraMembership(std::span<const Polynomial> subgens) {
  if (subgens.empty()) throw std::invalid_argument("subalgebra_membership: no subalgebra generators");
  source_ = subgens.front().ring();
  const std::size_t n = source_->nvars(), r = subgens.size();
  std::vector<std::string> tag_names, tagged_names = source_->vars();
  std::string prefix = "u@";
  while (std::any_of(tagged_names.begin(), tagged_names.end(),
                     [&](const std::string& v) { return v.rfind(prefix, 0) == 0; }))
    prefix += "@";
  for (std::size_t i = 0; i < r; ++i) {
    tag_names.push_back("u" + std::to_string(i + 1));
    tagged_names.push_back(prefix + std::to_string(i + 1));
  }
  tags_ = Ring::create(source_->field(), tag_names, MonomialOrder::grevlex);
  tagged_ = Ring::create(source_->field(), tagged_names, MonomialOrder::lex);
  std::vector<std::size_t> embed(n);
  for (std::size_t i = 0; i < n; ++i) embed[i] = i;
  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < r; ++i) {
    if (!subgens[i].ring()->same_vars(*source_)) throw RingMismatch("subalgebra_membership: ring mismatch");
    ideal.push_back(Polynomial::variable(tagged_, n + i) - subgens[i].remap(tagged_, embed));
  }
  basis_ = groebner(ideal, MonomialOrder::lex);
}

MembershipResult SubalgebraMembership::test(const Polynomial& f) const {
  if (!f.ring()->same_vars(*source_)) throw RingMismatch("subalgebra_membership: ring mismatch");
  const std::size_t n = source_->nvars();
  std::vector<std::size_t> embed(n);
  for (std::size_t i = 0; i < n; ++i) embed[i] = i;
  Polynomial nf = normal_form(f.remap(tagged_, embed), basis_);
  bool only_tags = true;
  for (std::size_t v = 0; v < n && only_tags; ++v)
    if (nf.uses_var(v)) only_tags = false;
  MembershipResult res{only_tags, std::nullopt, nf, tags_};
  if (only_tags) {
    std::vector<std::size_t> back(tagged_->nvars(), 0);
    for (std::size_t i = n; i < back.size(); ++i) back[i] = i - n;
    res.expression = nf.remap(tags_, back);
  }
  return res;
}

MembershipResult subalgebra_membership(const Polynomial& f, std::span<const Polynomial> subgens) {
  return SubalgebraMembership(subgens).test(f);
}

}  // namespace modinv
