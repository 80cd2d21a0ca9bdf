#include "modinv/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "modinv/linalg.hpp"

namespace modinv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Coeffs = std::vector<unsigned>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
  Coeffs f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor candidate of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr FieldCtx::create(unsigned p, unsigned s, std::optional<std::vector<unsigned>> modulus,
                          FieldCaps caps) {
  if (!is_prime(p)) throw std::invalid_argument("field_create: p = " + std::to_string(p) + " is not prime");
  if (p > caps.max_p)
    throw std::invalid_argument("field_create: p = " + std::to_string(p) + " exceeds cap " +
                                std::to_string(caps.max_p));
  if (s == 0) throw std::invalid_argument("field_create: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q > caps.max_q || q > (1ull << 24))
      throw std::invalid_argument("field_create: field size exceeds cap " + std::to_string(caps.max_q));
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->s_ = s;
  ctx->q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != s + 1 || m.back() != 1)
      throw std::invalid_argument("field_create: modulus must be monic of degree " + std::to_string(s));
    for (auto c : m)
      if (c >= p) throw std::invalid_argument("field_create: modulus coefficient out of range");
    if (!is_irreducible_mod_p(m, p)) throw std::invalid_argument("field_create: modulus is reducible");
    ctx->modulus_ = m;
  } else if (s == 1) {
    ctx->modulus_ = {0, 1};
  } else {
    // Codes enumerate (c_0..c_{s-1}) with the highest coefficient most
    // significant, so the first hit is the smallest in that order.
    for (std::uint64_t code = 0; code < q; ++code) {
      Coeffs m(s + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < s; ++i) {
        m[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      m[s] = 1;
      if (is_irreducible_mod_p(m, p)) {
        ctx->modulus_ = m;
        break;
      }
    }
  }

  if (s == 1)
    ctx->gen_code_ = (p - ctx->modulus_[0] % p) % p;
  else
    ctx->gen_code_ = p;
  ctx->build_tables();
  return ctx;
}

bool FieldCtx::same_field(const FieldCtx& other) const {
  return this == &other || (p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_);
}

std::vector<unsigned> FieldCtx::coeffs(Code a) const {
  std::vector<unsigned> out(s_, 0);
  for (unsigned i = 0; i < s_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FieldCtx::Code FieldCtx::from_coeffs(std::span<const unsigned> coeffs) const {
  Coeffs c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= p_;
  if (c.size() > s_) c = poly_mod(std::move(c), modulus_, p_);
  Code code = 0;
  Code scale = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    code += c[i] * scale;
    scale *= p_;
  }
  return code;
}

FieldCtx::Code FieldCtx::slow_mul(Code a, Code b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  Coeffs prod(2 * s_, 0);
  for (unsigned i = 0; i < s_; ++i)
    for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  return from_coeffs(poly_mod(std::move(prod), modulus_, p_));
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  auto slow_pow = [&](Code a, std::uint64_t e) {
    Code r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Code primitive = 1;
  if (order > 1) {
    const auto factors = prime_factors(order);
    for (Code c = 2; c < q_; ++c) {
      const bool ok = std::all_of(factors.begin(), factors.end(),
                                  [&](std::uint64_t r) { return slow_pow(c, order / r) != 1; });
      if (ok) {
        primitive = c;
        break;
      }
    }
  }
  exp_.assign(order, 0);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, primitive);
  }
  // Zech logarithms: 1 + g^i, added coefficientwise on the constant digit.
  zech_.assign(order, -1);
  for (std::uint32_t i = 0; i < order; ++i) {
    const Code v = exp_[i];
    const Code sum = v - v % p_ + (v % p_ + 1) % p_;
    zech_[i] = sum == 0 ? -1 : static_cast<std::int64_t>(log_[sum]);
  }
  neg_one_log_ = (p_ == 2) ? 0 : order / 2;
}

FieldCtx::Code FieldCtx::add(Code a, Code b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t order = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t d = (log_[b] + order - la) % order;
  const auto z = zech_[d];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint32_t>(z)) % order];
}

FieldCtx::Code FieldCtx::neg(Code a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[(log_[a] + neg_one_log_) % (q_ - 1)];
}

FieldCtx::Code FieldCtx::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FieldCtx::Code FieldCtx::inv(Code a) const {
  if (a == 0) throw std::domain_error("division by zero in " + spec());
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

FieldCtx::Code FieldCtx::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

FieldCtx::Code FieldCtx::frobenius(Code a, unsigned e) const {
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe = (pe * p_) % order;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * pe) % order];
}

FieldCtx::Code FieldCtx::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::string FieldCtx::format(Code a) const {
  if (a == 0) return "0";
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = s_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

bool FieldCtx::is_compound(Code a) const {
  const auto c = coeffs(a);
  return std::count_if(c.begin(), c.end(), [](unsigned x) { return x != 0; }) > 1;
}

std::string FieldCtx::spec() const {
  std::ostringstream os;
  if (s_ == 1 && modulus_ == Coeffs{0, 1}) {
    os << "GF(" << p_ << ")";
    return os.str();
  }
  os << "GF(" << p_ << '^' << s_ << ")/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

// FieldElement

const FieldCtx& FieldElement::checked(const FieldElement& o) const {
  if (!ctx_ || !o.ctx_) throw ContextMismatch("field element without a field");
  if (ctx_ != o.ctx_ && !ctx_->same_field(*o.ctx_))
    throw ContextMismatch("mixed fields: " + ctx_->spec() + " and " + o.ctx_->spec());
  return *ctx_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {ctx_, checked(o).add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {ctx_, checked(o).sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {ctx_, checked(o).mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {ctx_, checked(o).div(code_, o.code_)};
}
FieldElement FieldElement::inverse() const { return {ctx_, ctx_->inv(code_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  checked(o);
  return code_ == o.code_;
}

FieldElement frobenius(const FieldElement& x, unsigned e) {
  return {x.ctx(), x.ctx()->frobenius(x.code(), e)};
}

namespace {

const FieldPtr& shared_ctx(std::span<const FieldElement> xs) {
  const FieldPtr& k = xs.front().ctx();
  for (const auto& x : xs)
    if (x.ctx() != k && !x.ctx()->same_field(*k))
      throw ContextMismatch("Moore system with mixed fields");
  return k;
}

// Row i, column j holds alpha_j^(p^i).
FqMatrix moore_matrix(std::span<const FieldElement> alphas) {
  const FieldPtr& k = shared_ctx(alphas);
  const std::size_t n = alphas.size();
  FqMatrix m(k, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = k->frobenius(alphas[j].code(), static_cast<unsigned>(i));
  return m;
}

}  // namespace

FieldElement moore_det(std::span<const FieldElement> alphas) {
  if (alphas.empty()) throw std::invalid_argument("moore_det: empty tuple");
  return {alphas.front().ctx(), determinant(moore_matrix(alphas))};
}

bool fp_independent(std::span<const FieldElement> alphas) {
  if (alphas.empty()) return true;
  if (alphas.size() > alphas.front().ctx()->s()) {
    shared_ctx(alphas);
    return false;
  }
  return !moore_det(alphas).is_zero();
}

MooreSystem moore_inverse(std::span<const FieldElement> alphas) {
  if (alphas.empty()) throw std::invalid_argument("moore_inverse: empty tuple");
  const FieldPtr& k = shared_ctx(alphas);
  const std::size_t n = alphas.size();
  if (n > k->s()) throw SingularSystem("moore_inverse: more than s elements are always dependent");
  // F * M^T = I where M^T[j][k] = alpha_k^(p^j), i.e. F = (M^T)^{-1}.
  const auto inv = inverse(moore_matrix(alphas));
  if (!inv) throw SingularSystem("moore_inverse: elements are F_p-linearly dependent");
  MooreSystem sys{k, {alphas.begin(), alphas.end()}, std::vector<std::vector<FieldElement>>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) (*sys.inverse)[i].emplace_back(k, inv->at(i, j));
  return sys;
}

FieldElement linearized_eval(std::span<const FieldElement> coeffs, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.ctx());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    acc += coeffs[j] * frobenius(x, static_cast<unsigned>(j));
  return acc;
}

}  // namespace modinv
