#include "frobsplit/finfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "frobsplit/errors.hpp"
#include "frobsplit/modpoly.hpp"

namespace frobsplit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 checked_power(u64 p, int k) {
  constexpr u64 kLimit = u64{1} << 63;
  u64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (kLimit - 1) / p) {
      fail(ErrorCode::kOverflow, std::to_string(p) + "^" + std::to_string(k) +
                                     " does not fit below 2^63");
    }
    r *= p;
  }
  return r;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (!is_prime(p)) {
    fail(ErrorCode::kCompositeModulus, std::to_string(p) + " is not prime");
  }
}

ExtField::ExtField(u64 p, int k, std::vector<u64> modulus)
    : p_(p), k_(k), size_(checked_power(p, k)), modulus_(std::move(modulus)) {
  if (k_ > 1 && size_ <= kTableLimit) build_tables();
}

void ExtField::build_tables() {
  // Find a primitive element with the slow multiplication first.
  const u64 order = size_ - 1;
  const auto divisors = prime_divisors(order);
  for (u64 g = 2; g < size_; ++g) {
    bool ok = true;
    for (u64 q : divisors) {
      u64 r = 1, base = g, e = order / q;
      while (e) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
  log_.assign(size_, 0);
  exp_.assign(2 * order, 0);
  u64 x = 1;
  for (u64 i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + order] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, primitive_);
  }
  if (size_ <= kAddTableLimit) {
    add_table_.assign(size_ * size_, 0);
    for (u64 a = 0; a < size_; ++a) {
      for (u64 b = 0; b < size_; ++b) {
        u64 r = 0, pw = 1, da = a, db = b;
        for (int i = 0; i < k_; ++i) {
          r += ((da % p_ + db % p_) % p_) * pw;
          da /= p_;
          db /= p_;
          pw *= p_;
        }
        add_table_[a * size_ + b] = static_cast<std::uint16_t>(r);
      }
    }
  }
}

u64 ExtField::add(u64 a, u64 b) const {
  if (k_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  u64 r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    u64 s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

u64 ExtField::neg(u64 a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  u64 r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    u64 d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * pw;
    a /= p_;
    pw *= p_;
  }
  return r;
}

u64 ExtField::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 ExtField::mul_slow(u64 a, u64 b) const {
  std::vector<u64> x = coeffs(a), y = coeffs(b);
  std::vector<u64> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      if (y[j] == 0) continue;
      prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p_)) % p_;
    }
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) {
      const u64 t = mulmod(c, modulus_[j], p_);
      prod[i - k_ + j] = (prod[i - k_ + j] + p_ - t) % p_;
    }
    prod[i] = 0;
  }
  prod.resize(k_);
  return encode(prod);
}

u64 ExtField::mul(u64 a, u64 b) const {
  if (k_ == 1) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

u64 ExtField::inv(u64 a) const {
  if (a == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  if (!log_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

u64 ExtField::div(u64 a, u64 b) const { return mul(a, inv(b)); }

u64 ExtField::pow(u64 a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const u64 order = size_ - 1;
    return exp_[mulmod(log_[a], e % order, order)];
  }
  if (k_ == 1) return powmod_u64(a, e, p_);
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 ExtField::from_int(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

std::vector<u64> ExtField::coeffs(u64 v) const {
  std::vector<u64> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

u64 ExtField::encode(std::span<const u64> c) const {
  u64 r = 0, pw = 1;
  for (int i = 0; i < k_; ++i) {
    const u64 d = i < static_cast<int>(c.size()) ? c[i] % p_ : 0;
    r += d * pw;
    if (i + 1 < k_) pw *= p_;
  }
  return r;
}

FFElement ExtField::element(u64 v) const {
  if (v >= size_) {
    fail(ErrorCode::kInvalidArgument,
         "encoded value " + std::to_string(v) + " outside field of size " +
             std::to_string(size_));
  }
  return FFElement(*this, v);
}

FFElement ExtField::zero() const { return FFElement(*this, 0); }
FFElement ExtField::one() const { return FFElement(*this, 1); }

FFElement ExtField::generator() const {
  if (k_ == 1) {
    // t reduced modulo t is zero.
    return FFElement(*this, 0);
  }
  return FFElement(*this, p_);
}

u64 ExtField::primitive_element() const {
  if (primitive_ != 0) return primitive_;
  if (size_ == 2) return 1;
  const u64 order = size_ - 1;
  const auto divisors = prime_divisors(order);
  for (u64 g = 2; g < size_; ++g) {
    bool ok = true;
    for (u64 q : divisors) {
      if (pow(g, order / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

namespace {

std::vector<u64> least_irreducible(const ExtField& prime, int k) {
  const u64 p = prime.p();
  // c[0] is the most significant position in the search order.
  std::vector<u64> c(k + 1, 0);
  c[k] = 1;
  c[0] = 1;  // c0 == 0 leaves t as a factor
  while (true) {
    ModPoly f(prime, c);
    if (is_irreducible_mod(f)) return c;
    int i = k - 1;
    while (i >= 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  fail(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

}  // namespace

const ExtField& make_field(u64 p, int k) {
  static std::mutex mutex;
  static std::map<std::pair<u64, int>, std::unique_ptr<ExtField>> registry;

  if (k < 1) fail(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (!is_prime(p)) {
    fail(ErrorCode::kCompositeModulus, std::to_string(p) + " is not prime");
  }
  checked_power(p, k);
  {
    std::lock_guard lock(mutex);
    auto it = registry.find({p, k});
    if (it != registry.end()) return *it->second;
    if (k == 1) {
      auto field = std::unique_ptr<ExtField>(new ExtField(p, 1, {0, 1}));
      return *registry.emplace(std::pair{p, 1}, std::move(field)).first->second;
    }
  }
  const ExtField& prime = make_field(p, 1);
  auto modulus = least_irreducible(prime, k);
  std::lock_guard lock(mutex);
  auto it = registry.find({p, k});
  if (it != registry.end()) return *it->second;
  auto field = std::unique_ptr<ExtField>(new ExtField(p, k, std::move(modulus)));
  return *registry.emplace(std::pair{p, k}, std::move(field)).first->second;
}

void FFElement::check_same(const FFElement& o) const {
  if (field_ != o.field_) {
    fail(ErrorCode::kFieldMismatch,
         "elements of F_" + std::to_string(field_->size()) + " and F_" +
             std::to_string(o.field_->size()));
  }
}

FFElement FFElement::operator+(const FFElement& o) const {
  check_same(o);
  return FFElement(*field_, field_->add(value_, o.value_));
}

FFElement FFElement::operator-(const FFElement& o) const {
  check_same(o);
  return FFElement(*field_, field_->sub(value_, o.value_));
}

FFElement FFElement::operator*(const FFElement& o) const {
  check_same(o);
  return FFElement(*field_, field_->mul(value_, o.value_));
}

FFElement FFElement::operator/(const FFElement& o) const {
  check_same(o);
  return FFElement(*field_, field_->div(value_, o.value_));
}

FFElement FFElement::operator-() const {
  return FFElement(*field_, field_->neg(value_));
}

FFElement FFElement::pow(u64 e) const {
  return FFElement(*field_, field_->pow(value_, e));
}

FFElement FFElement::inverse() const {
  return FFElement(*field_, field_->inv(value_));
}

std::string FFElement::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

FFElement field_arith(const FFElement& x, const FFElement& y, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return x + y;
    case ArithOp::kSub: return x - y;
    case ArithOp::kMul: return x * y;
    case ArithOp::kDiv: return x / y;
    case ArithOp::kPow: return x.pow(y.value());
  }
  fail(ErrorCode::kInvalidArgument, "unknown operation");
}

std::vector<FFElement> frobenius_orbit(const FFElement& x) {
  std::vector<FFElement> orbit{x};
  FFElement y = FFElement(x.field(), x.field().frobenius(x.value()));
  while (!(y == x)) {
    orbit.push_back(y);
    y = FFElement(x.field(), x.field().frobenius(y.value()));
  }
  return orbit;
}

std::vector<u64> minimal_polynomial(const FFElement& x) {
  const ExtField& f = x.field();
  std::vector<u64> poly{1};  // encoded values in f
  for (const FFElement& root : frobenius_orbit(x)) {
    std::vector<u64> next(poly.size() + 1, 0);
    const u64 neg_root = f.neg(root.value());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], poly[i]);
      next[i] = f.add(next[i], f.mul(poly[i], neg_root));
    }
    poly = std::move(next);
  }
  // Coefficients are Frobenius-fixed, hence encoded below p.
  return poly;
}

int subfield_degree(const FFElement& x) {
  return static_cast<int>(frobenius_orbit(x).size());
}

}  // namespace frobsplit
