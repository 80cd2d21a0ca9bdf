#pragma once

// Buchberger Groebner bases, normal forms, elimination and subalgebra
// membership by tag variables.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modinv/polyring.hpp"

namespace modinv {

struct GBasis {
  RingPtr ring;  // carries the order the basis was computed in
  std::vector<Polynomial> gens;  // reduced, monic, sorted by decreasing leading monomial
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// The zero ideal gives an empty basis.
GBasis groebner(std::span<const Polynomial> gens, MonomialOrder order);

/// Remainder of full multivariate division of f by the basis. f may live in
/// any ring with the same variables; the result is in gb.ring.
Polynomial normal_form(const Polynomial& f, const GBasis& gb);

/// Generic division remainder (no Groebner assumption on `divisors`).
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors);

bool ideal_member(const Polynomial& f, const GBasis& gb);

/// Generators of ideal(gens) intersected with k[keep], expressed in the
/// ring of the inputs.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const std::size_t> keep);
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::span<const std::string> keep);

struct MembershipResult {
  bool member = false;
  /// Expression in `tags` (variables u1..ur) when member.
  std::optional<Polynomial> expression;
  /// Normal form in the tagged ring; it involves an x-variable when f is not
  /// a member.
  Polynomial residue;
  RingPtr tags;
};

/// Decides f in k[subgens] via the lex basis of {u_i - subgen_i} with the
/// original variables above the tags.
MembershipResult subalgebra_membership(const Polynomial& f, std::span<const Polynomial> subgens);

/// The same test with the tag basis computed once for many candidates.
class SubalgebraMembership {
 public:
  explicit SubalgebraMembership(std::span<const Polynomial> subgens);
  MembershipResult test(const Polynomial& f) const;
  const RingPtr& tags() const { return tags_; }

 private:
  RingPtr source_;
  RingPtr tags_;
  RingPtr tagged_;
  GBasis basis_;
};

}  // namespace modinv
