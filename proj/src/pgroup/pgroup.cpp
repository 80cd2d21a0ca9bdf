#include "modinv/pgroup.hpp"

#include <algorithm>
#include <sstream>

namespace modinv {

namespace {

// Returns p with n == p^k for k >= 1, or 0.
unsigned prime_of_power(std::size_t n) {
  if (n < 2) return 0;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? static_cast<unsigned>(p) : 0;
}

std::vector<bool> closure(const std::vector<std::vector<std::size_t>>& table,
                          const std::vector<std::size_t>& gens) {
  std::vector<bool> in(table.size(), false);
  std::vector<std::size_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const auto a = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      const auto b = table[a][g];
      if (!in[b]) {
        in[b] = true;
        frontier.push_back(b);
      }
    }
  }
  return in;
}

}  // namespace

GroupPtr GroupTable::validate(std::vector<std::vector<Index>> table,
                              std::optional<std::vector<Index>> gens,
                              std::optional<std::vector<std::string>> names, unsigned p,
                              GroupCaps caps) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError("group_validate: empty table");
  if (n > caps.max_order)
    throw GroupError("group_validate: order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(caps.max_order));
  for (const auto& row : table) {
    if (row.size() != n) throw GroupError("group_validate: table is not square");
    for (auto x : row)
      if (x >= n) throw GroupError("group_validate: entry " + std::to_string(x) + " out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw GroupError("group_validate: index 0 is not a two-sided identity (element " +
                       std::to_string(a) + ")");
  std::vector<Index> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] == n) throw GroupError("group_validate: element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "group_validate: associativity fails at (" << a << "," << b << "," << c << ")";
          throw GroupError(os.str());
        }

  unsigned prime = prime_of_power(n);
  if (n > 1 && prime == 0)
    throw GroupError("group_validate: order " + std::to_string(n) + " is not a prime power");
  if (n > 1 && p != 0 && p != prime)
    throw GroupError("group_validate: order " + std::to_string(n) + " is not a power of " + std::to_string(p));
  if (n == 1) prime = p;

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->p_ = prime;
  g->inverse_ = std::move(inv);
  g->elem_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    Index x = a;
    while (x != 0) {
      x = table[x][a];
      ++k;
    }
    g->elem_order_[a] = k;
    if (n > 1 && prime_of_power(k) != prime && k != 1)
      throw GroupError("group_validate: element order " + std::to_string(k) + " is not a power of p");
  }

  if (gens) {
    for (auto x : *gens)
      if (x >= n) throw GroupError("group_validate: generator index out of range");
    const auto in = closure(table, *gens);
    if (!std::all_of(in.begin(), in.end(), [](bool b) { return b; }))
      throw GroupError("group_validate: supplied generators do not generate the group");
    g->gens_ = *gens;
  } else {
    std::vector<Index> gs;
    auto in = closure(table, gs);
    for (std::size_t a = 1; a < n; ++a) {
      if (in[a]) continue;
      gs.push_back(a);
      in = closure(table, gs);
    }
    g->gens_ = std::move(gs);
  }

  if (names) {
    if (names->size() != n) throw GroupError("group_validate: wrong number of element names");
    g->names_ = std::move(*names);
  } else {
    g->names_.resize(n);
    g->names_[0] = "1";
    for (std::size_t a = 1; a < n; ++a) g->names_[a] = "g" + std::to_string(a);
  }
  g->table_ = std::move(table);
  return g;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool GroupTable::is_elementary_abelian() const {
  if (!is_abelian()) return false;
  for (std::size_t a = 1; a < order(); ++a)
    if (elem_order_[a] != p_) return false;
  return true;
}

GroupPtr group_cyclic(unsigned p, unsigned n, GroupCaps caps) {
  if (prime_of_power(p) != p) throw GroupError("group_cyclic: p = " + std::to_string(p) + " is not prime");
  std::size_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > caps.max_order) throw GroupError("group_cyclic: order exceeds cap");
  }
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    names[a] = a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a));
  }
  std::vector<std::size_t> gens;
  if (order > 1) gens.push_back(1);
  return GroupTable::validate(std::move(t), gens, std::move(names), p, caps);
}

std::pair<GroupPtr, ElemAbCoords> group_elemab(unsigned p, unsigned n, GroupCaps caps) {
  if (prime_of_power(p) != p) throw GroupError("group_elemab: p = " + std::to_string(p) + " is not prime");
  std::size_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > caps.max_order) throw GroupError("group_elemab: order exceeds cap");
  }
  ElemAbCoords coords{p, n, std::vector<std::vector<unsigned>>(order, std::vector<unsigned>(n))};
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t x = a;
    for (unsigned i = 0; i < n; ++i) {
      coords.coords[a][i] = static_cast<unsigned>(x % p);
      x /= p;
    }
  }
  auto index_of = [&](const std::vector<unsigned>& v) {
    std::size_t idx = 0, scale = 1;
    for (unsigned i = 0; i < n; ++i) {
      idx += v[i] * scale;
      scale *= p;
    }
    return idx;
  };
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<unsigned> v(n);
      for (unsigned i = 0; i < n; ++i) v[i] = (coords.coords[a][i] + coords.coords[b][i]) % p;
      t[a][b] = index_of(v);
    }
    std::ostringstream os;
    os << '(';
    for (unsigned i = 0; i < n; ++i) os << (i ? "," : "") << coords.coords[a][i];
    os << ')';
    names[a] = os.str();
  }
  std::vector<std::size_t> gens;
  std::size_t scale = 1;
  for (unsigned i = 0; i < n; ++i) {
    gens.push_back(scale);
    scale *= p;
  }
  return {GroupTable::validate(std::move(t), gens, std::move(names), p, caps), std::move(coords)};
}

GroupPtr group_product(const GroupTable& g1, const GroupTable& g2, GroupCaps caps) {
  unsigned p = g1.p();
  if (g1.order() > 1 && g2.order() > 1 && g1.p() != g2.p())
    throw GroupError("group_product: characteristics differ (" + std::to_string(g1.p()) + " vs " +
                     std::to_string(g2.p()) + ")");
  if (g1.order() == 1) p = g2.p();
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  if (n > caps.max_order) throw GroupError("group_product: order exceeds cap");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t a1 = a / n2, a2 = a % n2;
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g1.mul(a1, b / n2) * n2 + g2.mul(a2, b % n2);
    names[a] = a == 0 ? "1" : "(" + g1.names()[a1] + "," + g2.names()[a2] + ")";
  }
  std::vector<std::size_t> gens;
  for (auto x : g1.gens()) gens.push_back(x * n2);
  for (auto x : g2.gens()) gens.push_back(x);
  return GroupTable::validate(std::move(t), gens, std::move(names), p, caps);
}

std::optional<ElemAbCoords> elemab_coords(const GroupTable& g) {
  if (!g.is_elementary_abelian()) return std::nullopt;
  const unsigned p = g.p();
  const std::size_t r = g.gens().size();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < r; ++i) expected *= p;
  if (expected != g.order()) return std::nullopt;
  ElemAbCoords c{p, r, std::vector<std::vector<unsigned>>(g.order())};
  std::vector<bool> seen(g.order(), false);
  for (std::size_t code = 0; code < expected; ++code) {
    std::vector<unsigned> v(r);
    std::size_t x = code;
    std::size_t elem = 0;
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = static_cast<unsigned>(x % p);
      x /= p;
      for (unsigned k = 0; k < v[i]; ++k) elem = g.mul(elem, g.gens()[i]);
    }
    if (seen[elem]) return std::nullopt;
    seen[elem] = true;
    c.coords[elem] = std::move(v);
  }
  return c;
}

}  // namespace modinv
