#pragma once

// Finite p-groups as explicit Cayley tables. Element 0 is always the
// identity and the enumeration order is fixed at construction; algebras
// built on a group index their variables and caches by it.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modinv {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupCaps {
  std::size_t max_order = 27;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

class GroupTable {
 public:
  using Index = std::size_t;

  /// Checks the group axioms exhaustively and that the order is a power of
  /// a single prime. Generators are picked greedily in index order unless
  /// supplied. `p` disambiguates the trivial group (0 = unknown).
  static GroupPtr validate(std::vector<std::vector<Index>> table,
                           std::optional<std::vector<Index>> gens = std::nullopt,
                           std::optional<std::vector<std::string>> names = std::nullopt,
                           unsigned p = 0, GroupCaps caps = {});

  std::size_t order() const { return table_.size(); }
  /// Characteristic prime (0 only for a trivial group of unknown prime).
  unsigned p() const { return p_; }
  Index mul(Index a, Index b) const { return table_[a][b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index identity() const { return 0; }
  std::size_t element_order(Index a) const { return elem_order_[a]; }
  const std::vector<Index>& gens() const { return gens_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<Index>>& table() const { return table_; }

  bool is_abelian() const;
  /// Abelian of exponent p (the trivial group counts).
  bool is_elementary_abelian() const;

  bool operator==(const GroupTable& o) const { return table_ == o.table_ && gens_ == o.gens_; }

 private:
  GroupTable() = default;

  unsigned p_ = 0;
  std::vector<std::vector<Index>> table_;
  std::vector<Index> inverse_;
  std::vector<std::size_t> elem_order_;
  std::vector<Index> gens_;
  std::vector<std::string> names_;
};

/// Coordinates of an elementary-abelian group over F_p with respect to its
/// generator list: element g = sum_i coords[g][i] * gens[i].
struct ElemAbCoords {
  unsigned p = 0;
  std::size_t rank = 0;
  std::vector<std::vector<unsigned>> coords;
};

GroupPtr group_cyclic(unsigned p, unsigned n, GroupCaps caps = {});

/// (F_p^n, +) with element index sum_i g_i p^(i-1) (first coordinate varies
/// fastest), so e_i sits at index p^(i-1).
std::pair<GroupPtr, ElemAbCoords> group_elemab(unsigned p, unsigned n, GroupCaps caps = {});

/// Direct product with element (a, b) at index a * |G2| + b.
GroupPtr group_product(const GroupTable& g1, const GroupTable& g2, GroupCaps caps = {});

/// Coordinates relative to g.gens(), when g is elementary abelian and its
/// generators form an F_p-basis.
std::optional<ElemAbCoords> elemab_coords(const GroupTable& g);

}  // namespace modinv
