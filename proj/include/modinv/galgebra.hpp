#pragma once

// k-G algebras: a polynomial ring with a right action of a finite p-group
// by algebra endomorphisms, written (f)g. The action is given on the group
// generators and extended to every element along breadth-first generator
// words, then checked against the group law on every variable and pair.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modinv/pgroup.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

/// Group-law violation: ((var)g)h differs from (var)(gh).
class ActionError : public std::runtime_error {
 public:
  ActionError(const std::string& what, std::string var, std::size_t g, std::size_t h)
      : std::runtime_error(what), var_(std::move(var)), g_(g), h_(h) {}
  const std::string& var() const { return var_; }
  std::size_t g() const { return g_; }
  std::size_t h() const { return h_; }

 private:
  std::string var_;
  std::size_t g_;
  std::size_t h_;
};

class GAlgebra {
 public:
  /// One VarMap (ring -> ring) per entry of group->gens(), in that order.
  static GAlgebra make(RingPtr ring, GroupPtr group, std::vector<VarMap> gen_maps);
  /// Same, with maps describing a left action; generators are inverted.
  static GAlgebra from_left_action(RingPtr ring, GroupPtr group, std::vector<VarMap> gen_maps);

  const RingPtr& ring() const { return ring_; }
  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return ring_->field(); }
  const std::vector<VarMap>& generator_maps() const { return gen_maps_; }
  const VarMap& element_map(std::size_t g) const { return elem_maps_.at(g); }

  Polynomial act(const Polynomial& f, std::size_t g) const;
  Polynomial trace(const Polynomial& f) const;
  bool is_invariant(const Polynomial& f) const;
  /// The |G| images (f)g, indexed by group enumeration.
  std::vector<Polynomial> orbit(const Polynomial& f) const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(ring_, text); }

 private:
  GAlgebra() = default;

  RingPtr ring_;
  GroupPtr group_;
  std::vector<VarMap> gen_maps_;
  std::vector<VarMap> elem_maps_;
};

struct PointCert {
  Polynomial element;
  std::vector<Polynomial> orbit;
};

/// A point (tr = 1) among polynomials of degree <= deg_bound, searching
/// degrees 1, 2, ... in turn. nullopt means "unknown at this bound".
std::optional<PointCert> find_point(const GAlgebra& a, unsigned deg_bound);
/// Certificate for a given element; nullopt when tr(f) != 1.
std::optional<PointCert> certify_point(const GAlgebra& a, const Polynomial& f);

struct TriangularCert {
  std::vector<std::size_t> var_order;
  /// offsets[k][i] = (T_i)g_k - T_i for generator k, variable var_order[i].
  std::vector<std::vector<Polynomial>> offsets;
};

std::optional<TriangularCert> is_triangular(const GAlgebra& a, const std::vector<std::size_t>& var_order);
/// Tries every variable order (only for at most `max_vars` variables).
std::optional<TriangularCert> find_triangular_order(const GAlgebra& a, std::size_t max_vars = 6);

/// Equivariance on variables x generators: m((v)g) == (m(v))g.
bool is_equivariant(const GAlgebra& source, const GAlgebra& target, const VarMap& m);

struct AlgebraMorphism {
  VarMap map;
  bool equivariant = false;
};

/// Reflexivity test in D_k(G). var_element[i] is the group element indexing
/// variable i (x_g); w must be a point.
bool is_reflexive_point(const GAlgebra& dk, const std::vector<std::size_t>& var_element, const Polynomial& w);

/// The equivariant map D_k(G) -> target sending x_g to (a)g.
AlgebraMorphism morphism_from_point(const GAlgebra& dk, const std::vector<std::size_t>& var_element,
                                    const GAlgebra& target, const PointCert& a);

/// A over G1 and B over G2 give A (x) B over G1 x G2, acting componentwise.
GAlgebra tensor(const GAlgebra& a, const GAlgebra& b);

struct SameSideTensor {
  GAlgebra algebra;
  VarMap inject_a;
  VarMap inject_b;
};

/// A (x)_k B with the diagonal action of the common group.
SameSideTensor same_side_tensor(const GAlgebra& a, const GAlgebra& b);

/// Variable names of two factors with clashes in the second renamed.
std::vector<std::string> disjoint_names(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace modinv
