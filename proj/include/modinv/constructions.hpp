#pragma once

// Named algebras and morphisms: the dehomogenized regular algebra D_k(G),
// the translation algebra Mho = k[Y_1..Y_n], the univariate basic algebras
// B_alpha = k[Z], the maps theta, psi and L between them, the tensor
// isomorphism Theta, and the cyclic C_{p^2} example on k[x, y].

#include <optional>
#include <vector>

#include "modinv/ffield.hpp"
#include "modinv/galgebra.hpp"
#include "modinv/pgroup.hpp"
#include "modinv/polyring.hpp"

namespace modinv {

struct DkAlgebra {
  GAlgebra base;
  /// 1 - sum of the variables: the class of x_1.
  Polynomial x1;
  /// var_element[i] = group element indexing variable i (never 0).
  std::vector<std::size_t> var_element;
};

/// k[x_g | g != 1] with (x_g)h = x_{gh}, where x_1 stands for 1 - sum x_g.
DkAlgebra build_dk(const FieldPtr& k, const GroupPtr& g);

struct MhoAlgebra {
  GAlgebra base;
  ElemAbCoords coords;
};

/// k[Y_1..Y_n] over (F_p)^n with (Y_i)g = Y_i - g_i. A single variable is
/// named Y, otherwise Y1..Yn.
MhoAlgebra build_mho(const FieldPtr& k, unsigned p, unsigned n);
/// Same, over a given elementary-abelian group and its coordinates.
MhoAlgebra build_mho(const FieldPtr& k, const GroupPtr& g, const ElemAbCoords& coords);

struct BasicBAlpha {
  GAlgebra base;
  ElemAbCoords coords;
  /// alpha_1..alpha_n, the images of the coordinate generators.
  std::vector<FieldElement> alphas;
  /// alpha_g for every group element g.
  std::vector<FieldElement> alpha_of;
};

/// k[Z] with (Z)g = Z - alpha_g, alpha_g = sum_i g_i alpha_i. The alphas
/// must be F_p-independent.
BasicBAlpha build_balpha(const FieldPtr& k, const GroupPtr& g, const ElemAbCoords& coords,
                         std::vector<FieldElement> alphas);
/// Convenience: the standard elementary-abelian group of rank alphas.size().
BasicBAlpha build_balpha(const FieldPtr& k, std::vector<FieldElement> alphas);

/// theta: B_alpha -> Mho, Z -> sum_i alpha_i Y_i.
AlgebraMorphism build_theta(const BasicBAlpha& b, const MhoAlgebra& m);
/// psi: Mho -> B_alpha, Y_i -> f_i(Z), the linearized polynomial dual to
/// alpha_i under the Moore system.
AlgebraMorphism build_psi(const MhoAlgebra& m, const BasicBAlpha& b);

struct LinearizedMap {
  AlgebraMorphism morphism;
  /// lambda_0..lambda_{n-1}: Z -> sum_j lambda_j Z^(p^j).
  std::vector<FieldElement> lambdas;
};

/// L_{alpha,beta}: B_alpha -> B_beta, solving sum_j lambda_j beta_i^(p^j) = alpha_i.
LinearizedMap build_L(const BasicBAlpha& balpha, const BasicBAlpha& bbeta);

struct BigTheta {
  /// k[Z1..Zn] with (Z_s)g = Z_s - alpha^(s)_g: the tensor of the B's.
  GAlgebra source;
  AlgebraMorphism theta;
  /// Explicit inverse Mho -> source, present only when the matrix
  /// (alpha^(s)_j) is invertible and both compositions check as identities.
  std::optional<VarMap> inverse;
};

BigTheta build_big_theta(const std::vector<std::vector<FieldElement>>& alpha_family, const MhoAlgebra& m);

/// C_{p^2} on k[x, y]: (x)g = x + y^(p-1), (y)g = y - 1.
GAlgebra build_cp2_example(const FieldPtr& k);

bool is_reflexive_point(const DkAlgebra& dk, const Polynomial& w);
AlgebraMorphism morphism_from_point(const DkAlgebra& dk, const GAlgebra& target, const PointCert& a);

}  // namespace modinv
