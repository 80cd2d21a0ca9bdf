#pragma once

// Exact arithmetic in GF(p) and GF(p^s).
//
// A field is described by an immutable FieldCtx shared between all of its
// elements. Internally an element is a small integer code: the coefficient
// vector (c_0, ..., c_{s-1}) of its representative polynomial in t, read as
// the base-p number c_0 + c_1 p + ... . Code 0 is zero and code 1 is one.
// Multiplication and addition go through log / Zech-log tables of size q,
// which keeps the per-field footprint linear in q.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modinv {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Raised when operands from two different fields meet.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by linear solves that hit a singular system.
class SingularSystem : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Size limits applied by FieldCtx::create. The defaults keep exhaustive
/// oracles cheap; callers that need tower fields raise them explicitly.
struct FieldCaps {
  unsigned max_p = 13;
  std::uint64_t max_q = 81;
};

bool is_prime(std::uint64_t n);

class FieldCtx {
 public:
  using Code = std::uint32_t;

  /// Builds GF(p^s). Without a modulus, the first monic irreducible of
  /// degree s in lexicographic order of (c_0, ..., c_{s-1}) is used.
  static FieldPtr create(unsigned p, unsigned s,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt,
                         FieldCaps caps = {});

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, coefficients low-to-high (length s+1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  bool same_field(const FieldCtx& other) const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// Class of t, i.e. a root of the modulus.
  Code generator() const { return gen_code_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// a^(p^e).
  Code frobenius(Code a, unsigned e) const;
  Code from_int(long long v) const;
  Code from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(Code a) const;
  /// Rendering as an F_p-polynomial in t, e.g. "t+1", "2*t^2+1", "0".
  std::string format(Code a) const;
  /// True when the rendering has more than one summand (needs parentheses
  /// as a coefficient).
  bool is_compound(Code a) const;
  /// "GF(p)" or "GF(p^s)/m0,m1,...,1".
  std::string spec() const;

 private:
  FieldCtx() = default;
  Code slow_mul(Code a, Code b) const;
  void build_tables();

  unsigned p_ = 0;
  unsigned s_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  Code gen_code_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
  std::vector<std::int64_t> zech_;  // log(1 + g^i), -1 when 1 + g^i = 0
  std::uint32_t neg_one_log_ = 0;
};

/// Monic irreducibility over F_p by trial division (coefficients low-to-high).
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

/// Value type wrapping a code with its field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr ctx, FieldCtx::Code code) : ctx_(std::move(ctx)), code_(code) {}

  static FieldElement zero(const FieldPtr& k) { return {k, 0}; }
  static FieldElement one(const FieldPtr& k) { return {k, 1}; }
  static FieldElement from_int(const FieldPtr& k, long long v) { return {k, k->from_int(v)}; }
  static FieldElement t(const FieldPtr& k) { return {k, k->generator()}; }
  static FieldElement from_coeffs(const FieldPtr& k, std::span<const unsigned> c) {
    return {k, k->from_coeffs(c)};
  }

  const FieldPtr& ctx() const { return ctx_; }
  FieldCtx::Code code() const { return code_; }
  std::vector<unsigned> coeffs() const { return ctx_->coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {ctx_, ctx_->neg(code_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const { return {ctx_, ctx_->pow(code_, e)}; }

  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return ctx_->format(code_); }

 private:
  const FieldCtx& checked(const FieldElement& o) const;

  FieldPtr ctx_;
  FieldCtx::Code code_ = 0;
};

/// x^(p^e).
FieldElement frobenius(const FieldElement& x, unsigned e);

/// Determinant of the Moore matrix with entry (i, j) = alpha_j^(p^(i-1)).
FieldElement moore_det(std::span<const FieldElement> alphas);

/// F_p-linear independence, decided through the Moore determinant.
bool fp_independent(std::span<const FieldElement> alphas);

struct MooreSystem {
  FieldPtr ctx;
  std::vector<FieldElement> alphas;
  /// inverse[i][j] = f_ij with sum_j f_ij alpha_k^(p^j) = delta_ik.
  std::optional<std::vector<std::vector<FieldElement>>> inverse;
};

/// Solves for the coefficients of the linearized polynomials f_i with
/// f_i(alpha_k) = delta_ik. Throws SingularSystem on dependent input.
MooreSystem moore_inverse(std::span<const FieldElement> alphas);

/// sum_j coeffs[j] * x^(p^j).
FieldElement linearized_eval(std::span<const FieldElement> coeffs, const FieldElement& x);

}  // namespace modinv
