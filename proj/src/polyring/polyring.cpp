#include "modinv/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace modinv {

std::string to_string(MonomialOrder o) { return o == MonomialOrder::lex ? "lex" : "grevlex"; }

std::optional<MonomialOrder> parse_order(std::string_view s) {
  if (s == "lex") return MonomialOrder::lex;
  if (s == "grevlex") return MonomialOrder::grevlex;
  return std::nullopt;
}

// Ring

bool Ring::valid_name(std::string_view name) {
  if (name.empty() || name == "t") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@';
  });
}

RingPtr Ring::create(FieldPtr k, std::vector<std::string> vars, MonomialOrder order) {
  if (!k) throw std::invalid_argument("Ring: missing field");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_name(v)) throw std::invalid_argument("Ring: invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("Ring: duplicate variable '" + v + "'");
  }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->k_ = std::move(k);
  r->vars_ = std::move(vars);
  r->order_ = order;
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool Ring::same_vars(const Ring& o) const {
  return this == &o || (k_->same_field(*o.k_) && vars_ == o.vars_);
}

bool Ring::same_ring(const Ring& o) const { return this == &o || (same_vars(o) && order_ == o.order_); }

RingPtr Ring::with_order(MonomialOrder order) const { return create(k_, vars_, order); }

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (order_ == MonomialOrder::lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (!a.same_ring(b)) throw RingMismatch(std::string(where) + ": operands live in different rings");
}

// Monomials

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned s = unsigned(a[i]) + b[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    out[i] = static_cast<Exponent>(s);
  }
  return out;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Exponent>(b[i] - a[i]);
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

namespace {

// All exponent vectors of total degree exactly d over n variables.
void monomials_of_degree(std::size_t n, unsigned d, Monomial& cur, std::size_t pos, std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<Exponent>(d);
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[pos] = static_cast<Exponent>(e);
    monomials_of_degree(n, d - e, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  for (unsigned k = 0; k <= d; ++k) monomials_of_degree(nvars, k, cur, 0, out);
  return out;
}

// Polynomial

Polynomial Polynomial::constant(RingPtr ring, Code c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial(p.ring_->nvars(), 0), c});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  if (!c.ctx()->same_field(*ring->field())) throw ContextMismatch("constant from a different field");
  return constant(std::move(ring), c.code());
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("Polynomial::variable: index out of range");
  Monomial m(ring->nvars(), 0);
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const auto i = ring->index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Code c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->nvars()) throw std::invalid_argument("monomial length mismatch");
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  const FieldCtx& k = *r.field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.mono.size() != r.nvars()) throw std::invalid_argument("term length mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && ::modinv::total_degree(terms_[0].mono) == 0);
}

Polynomial::Code Polynomial::constant_term() const {
  if (!terms_.empty() && ::modinv::total_degree(terms_.back().mono) == 0) return terms_.back().coeff;
  return 0;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, ::modinv::total_degree(t.mono));
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

bool Polynomial::uses_var(std::size_t var) const { return degree_in(var) > 0; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*ring_, *o.ring_, "add");
  const Ring& r = *ring_;
  const FieldCtx& k = *r.field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      out.terms_.push_back(o.terms_[j++]);
      continue;
    }
    const int c = r.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      const auto s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) out.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = ring_->field()->neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scale(Code c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = ring_->field()->mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, Code c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  const FieldCtx& k = *ring_->field();
  // Monomial orders are compatible with multiplication, so order is kept.
  for (const auto& t : terms_) out.terms_.push_back({mono_mul(t.mono, m), k.mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*ring_, *o.ring_, "mul");
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  const FieldCtx& k = *ring_->field();
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back({mono_mul(a.mono, b.mono), k.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field()->inv(leading().coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_->same_vars(*o.ring_) && terms_ == o.terms_;
}

std::string format_coeff(const FieldCtx& k, FieldCtx::Code c) { return k.format(c); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const FieldCtx& k = *ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = ::modinv::total_degree(t.mono) == 0;
    if (unit) {
      os << k.format(t.coeff);
      continue;
    }
    if (t.coeff != 1) {
      if (k.is_compound(t.coeff))
        os << '(' << k.format(t.coeff) << ")*";
      else
        os << k.format(t.coeff) << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << ring_->vars()[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
    }
  }
  return os.str();
}

Polynomial Polynomial::remap(RingPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->nvars()) throw std::invalid_argument("remap: index map length mismatch");
  if (!target->field()->same_field(*ring_->field())) throw ContextMismatch("remap: different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] >= target->nvars()) throw std::out_of_range("remap: target index out of range");
      m[index_map[i]] = static_cast<Exponent>(m[index_map[i]] + t.mono[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::reorder(RingPtr target) const {
  if (!target->same_vars(*ring_)) throw RingMismatch("reorder: rings have different variables");
  std::vector<std::size_t> id(ring_->nvars());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return remap(std::move(target), id);
}

int compare(const Polynomial& a, const Polynomial& b) {
  const Ring& r = *a.ring();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = r.compare(a.terms()[i].mono, b.terms()[i].mono);
    if (c) return c;
    if (a.terms()[i].coeff != b.terms()[i].coeff) return a.terms()[i].coeff > b.terms()[i].coeff ? 1 : -1;
  }
  if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
  return 0;
}

// Parsing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (eat('-'))
        negate = true;
      else if (!eat('+') && !first)
        break;
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) {
      skip_ws();
      const auto e = integer();
      if (!e) fail("expected exponent");
      if (*e > std::numeric_limits<Exponent>::max()) fail("exponent too large");
      return base.pow(static_cast<unsigned>(*e));
    }
    return base;
  }

  std::optional<unsigned long long> integer() {
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return v;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer();
      return Polynomial::constant(ring_, ring_->field()->from_int(static_cast<long long>(*v % ring_->field()->p())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '@'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") {
        if (ring_->field()->s() == 1) {
          pos_ = start;
          fail("'t' is only defined over a proper extension field");
        }
        return Polynomial::constant(ring_, ring_->field()->generator());
      }
      if (const auto i = ring_->index_of(name)) return Polynomial::variable(ring_, *i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

FieldElement parse_field_element(const FieldPtr& k, std::string_view text) {
  const auto ring = Ring::create(k, {});
  const Polynomial p = parse_polynomial(ring, text);
  return {k, p.constant_term()};
}

// VarMap

VarMap VarMap::identity(const RingPtr& ring) {
  VarMap m{ring, ring, {}};
  for (std::size_t i = 0; i < ring->nvars(); ++i) m.images.push_back(Polynomial::variable(ring, i));
  return m;
}

bool VarMap::operator==(const VarMap& o) const {
  return source->same_vars(*o.source) && target->same_vars(*o.target) && images == o.images;
}

void validate(const VarMap& m) {
  if (m.images.size() != m.source->nvars())
    throw std::invalid_argument("VarMap: image count differs from source variable count");
  if (!m.source->field()->same_field(*m.target->field())) throw ContextMismatch("VarMap: different fields");
  for (const auto& img : m.images)
    if (!img.ring()->same_vars(*m.target)) throw RingMismatch("VarMap: image outside the target ring");
}

Polynomial apply_map(const VarMap& m, const Polynomial& f) {
  if (!f.ring()->same_vars(*m.source)) throw RingMismatch("apply_map: polynomial not in the source ring");
  const std::size_t n = m.source->nvars();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (const auto& img : m.images) images.push_back(img.ring()->same_ring(*m.target) ? img : img.reorder(m.target));
  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(m.target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(m.target, t.coeff);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(m.target, std::move(acc));
}

VarMap compose_maps(const VarMap& first, const VarMap& second) {
  if (!first.target->same_vars(*second.source))
    throw RingMismatch("compose_maps: target of the first map is not the source of the second");
  VarMap out{first.source, second.target, {}};
  out.images.reserve(first.images.size());
  for (const auto& img : first.images) out.images.push_back(apply_map(second, img));
  return out;
}

}  // namespace modinv
