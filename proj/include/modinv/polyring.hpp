#pragma once

// Sparse multivariate polynomials over a FieldCtx.
//
// A Ring fixes the coefficient field, the variable names and a monomial
// order in which the variable list gives precedence (first variable is the
// largest). Polynomials keep their terms sorted in decreasing order with no
// zero coefficients, so equality and printing are canonical.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/ffield.hpp"

namespace modinv {

enum class MonomialOrder { lex, grevlex };

std::string to_string(MonomialOrder o);
std::optional<MonomialOrder> parse_order(std::string_view s);

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error with a 1-based column (and line, when known).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column, std::size_t line = 0)
      : std::runtime_error(what), column_(column), line_(line) {}
  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr create(FieldPtr k, std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::grevlex);

  const FieldPtr& field() const { return k_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  MonomialOrder order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same field, variables and order.
  bool same_ring(const Ring& o) const;
  /// Same field and variables (order may differ).
  bool same_vars(const Ring& o) const;
  RingPtr with_order(MonomialOrder order) const;

  /// Three-way comparison of exponent vectors under the ring order.
  int compare(const Monomial& a, const Monomial& b) const;

  static bool valid_name(std::string_view name);

 private:
  Ring() = default;

  FieldPtr k_;
  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::grevlex;
};

void require_same_ring(const Ring& a, const Ring& b, const char* where);

struct Term {
  Monomial mono;
  FieldCtx::Code coeff;
  bool operator==(const Term&) const = default;
};

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// b / a, assuming divides(a, b).
Monomial mono_div(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
/// Every exponent vector of total degree <= d, by increasing degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

class Polynomial {
 public:
  using Code = FieldCtx::Code;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Code c);
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, Code c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Code constant_term() const;
  const Term& leading() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(Code c) const;
  Polynomial mul_term(const Monomial& m, Code c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

  /// Canonical text, e.g. "Y1^2 + t*Y1*Y2 + 1"; "0" for zero.
  std::string to_string() const;

  /// Re-express in `target` (same field); variable i goes to target
  /// variable index_map[i].
  Polynomial remap(RingPtr target, std::span<const std::size_t> index_map) const;
  /// Re-express in a ring with the same field and variables, any order.
  Polynomial reorder(RingPtr target) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Lexicographic comparison of term lists under the ring order.
int compare(const Polynomial& a, const Polynomial& b);

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
FieldElement parse_field_element(const FieldPtr& k, std::string_view text);
std::string format_coeff(const FieldCtx& k, FieldCtx::Code c);

/// Substitution homomorphism: source variable i goes to images[i].
struct VarMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;

  static VarMap identity(const RingPtr& ring);
  bool operator==(const VarMap& o) const;
};

void validate(const VarMap& m);
Polynomial apply_map(const VarMap& m, const Polynomial& f);
/// Applying the result equals applying `first` and then `second`.
VarMap compose_maps(const VarMap& first, const VarMap& second);

}  // namespace modinv
