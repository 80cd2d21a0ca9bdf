#pragma once

// Invariant rings: a linear-algebra oracle for the invariants of bounded
// degree, erasure invariants tr(a T_i) for triangular actions, the
// elimination route to S^G through S (x) Mho, Artin-Schreier generators,
// and a rational-point test of freeness.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modinv/constructions.hpp"
#include "modinv/galgebra.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

struct InvariantBasis {
  RingPtr ring;
  unsigned degree_bound = 0;
  /// Monic, with pairwise distinct leading monomials, by increasing degree.
  std::vector<Polynomial> basis;
};

/// k-basis of the invariants of degree <= d: the common kernel of
/// (g - 1) over the group generators on the span of monomials of degree <= d.
InvariantBasis invariants_bruteforce(const GAlgebra& a, unsigned d);

/// `INV <degree> <polynomial>` per basis element.
std::string format_invariants(const InvariantBasis& b);

struct ErasureCert {
  SameSideTensor tensor;
  /// The point of A, inside the tensor ring.
  Polynomial point;
  /// Tensor-ring indices of Gamma's variables T_1..T_N in triangular order.
  std::vector<std::size_t> t_vars;
  /// lambda_i = tr(point * T_i), invariant.
  std::vector<Polynomial> lambdas;
  /// A's variables followed by L1..LN standing for the lambdas.
  RingPtr rewrite_ring;
  /// rewrites[i] expresses T_i through A's variables and L_1..L_i.
  std::vector<Polynomial> rewrites;
};

/// Erasure of a triangular Gamma by A with a point. Every lambda is checked
/// invariant, T_i - lambda_i is checked to involve only A and earlier T's,
/// and every rewrite is checked to give back T_i after substituting the
/// lambdas. Throws std::runtime_error when a check fails.
ErasureCert erasure_lambdas(const GAlgebra& a, const PointCert& point, const GAlgebra& gamma,
                            const TriangularCert& cert);

struct EliminationResult {
  /// Generators of S^G found by elimination, after dropping redundant ones.
  std::vector<Polynomial> generators;
  /// Degree up to which the generators were compared with the oracle.
  unsigned d_check = 0;
  /// Brute-force invariants of degree <= d_check that are not polynomials
  /// in the generators (empty when the comparison succeeds).
  std::vector<Polynomial> unexplained;
  bool verified() const { return unexplained.empty(); }
};

/// S^G for a triangular, trace-surjective S over an elementary-abelian
/// group, computed as the image of Mho^G[mu] under Y_i -> sum_g g_i (a)g.
/// d_check = 0 means p * rank. Throws std::invalid_argument when S is not
/// over an elementary-abelian group, has no point within point_bound, or is
/// not triangular.
EliminationResult invariant_ring_elimination(const GAlgebra& s, unsigned d_check = 0, unsigned point_bound = 0);

struct ArtinSchreier {
  std::vector<Polynomial> generators;  // Y_i^p - Y_i
  /// The generators, their products and 1 span the invariants of degree <= p.
  bool spans_degree_p = false;
};

ArtinSchreier artin_schreier_gens(const MhoAlgebra& m);

struct FreenessWitness {
  unsigned tower = 0;
  std::vector<std::string> point;  // coordinates in GF(p^(s*tower))
  std::size_t element = 0;         // a nontrivial group element fixing the point
};

struct FreenessReport {
  /// No fixed point was found, and the search was either exhaustive or
  /// backed by the fixed-point ideals all being the unit ideal.
  bool free = false;
  /// The point cap cut the enumeration short.
  bool partial = false;
  std::size_t points_checked = 0;
  /// For every element g != 1: the ideal ((v)g - v) is the unit ideal, so g
  /// has no fixed point over any extension field.
  bool ideals_unit = false;
  std::vector<FreenessWitness> witnesses;  // at most a handful
};

/// Enumerates the points of A over GF(p^(s*m)) for m = 1..max_tower (at most
/// `cap` points per level) and checks that every g != 1 moves each of them.
FreenessReport freeness_on_points(const GAlgebra& a, unsigned max_tower, std::size_t cap = 200000);

/// Plain-text report with one `WITNESS <point> <g>` line per witness.
std::string format_freeness(const GAlgebra& a, const FreenessReport& r);

struct FreeBasisReport {
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  bool independent() const { return rank == unknowns; }
};

/// Linear independence of the orbit of `point` over the invariants of
/// degree <= d: sum_g r_g (point)g = 0 forces every r_g = 0.
FreeBasisReport free_basis_check(const GAlgebra& a, const Polynomial& point, unsigned d);

}  // namespace modinv
