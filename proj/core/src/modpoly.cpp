#include "frobsplit/modpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "frobsplit/errors.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

ModPoly::ModPoly(const ExtField& field, std::vector<u64> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (u64& v : c_) {
    if (v >= field.size()) v %= field.size();
  }
  trim();
}

ModPoly ModPoly::constant(const ExtField& field, u64 c) {
  return ModPoly(field, {c});
}

ModPoly ModPoly::monomial(const ExtField& field, int degree, u64 c) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c;
  return ModPoly(field, std::move(v));
}

ModPoly ModPoly::linear(const ExtField& field, u64 root) {
  return ModPoly(field, {field.neg(root), 1});
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void ModPoly::check_same(const ModPoly& o) const {
  if (field_ != o.field_) {
    fail(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(c_.back()));
}

ModPoly ModPoly::scaled(u64 s) const {
  std::vector<u64> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], s);
  return ModPoly(*field_, std::move(out));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(*field_);
  std::vector<u64> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(
                                        i % field_->p())));
  }
  return ModPoly(*field_, std::move(out));
}

u64 ModPoly::eval(u64 x) const {
  u64 r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = field_->add(field_->mul(r, x), *it);
  }
  return r;
}

ModPoly ModPoly::frobenius_coeffs(int j) const {
  std::vector<u64> out = c_;
  for (u64& v : out) {
    for (int i = 0; i < j; ++i) v = field_->frobenius(v);
  }
  return ModPoly(*field_, std::move(out));
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  check_same(o);
  std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  }
  return ModPoly(*field_, std::move(out));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  check_same(o);
  std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  }
  return ModPoly(*field_, std::move(out));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  check_same(o);
  if (c_.empty() || o.c_.empty()) return ModPoly(*field_);
  std::vector<u64> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], o.c_[j]));
    }
  }
  return ModPoly(*field_, std::move(out));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& d) const {
  check_same(d);
  if (d.is_zero()) fail(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (degree() < d.degree()) return {ModPoly(*field_), *this};
  std::vector<u64> rem = c_;
  std::vector<u64> quot(c_.size() - d.c_.size() + 1, 0);
  const u64 inv_lead = field_->inv(d.lead());
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    const u64 c = rem[i];
    if (c == 0) continue;
    const u64 q = field_->mul(c, inv_lead);
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = field_->sub(rem[i - dd + j], field_->mul(q, d.c_[j]));
    }
  }
  rem.resize(dd);
  return {ModPoly(*field_, std::move(quot)), ModPoly(*field_, std::move(rem))};
}

bool ModPoly::canonical_less(const ModPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return c_ < o.c_;
}

std::string ModPoly::to_string() const {
  std::ostringstream os;
  if (c_.empty()) return "0";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const ModPoly& a, const ModPoly& b) {
  const ExtField& f = a.field();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(f, 1), s1(f);
  ModPoly t0(f), t1 = ModPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const u64 inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly powmod(const ModPoly& base, u64 e, const ModPoly& mod) {
  ModPoly result = ModPoly::constant(base.field(), 1) % mod;
  ModPoly b = base % mod;
  while (e) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

ModPoly ModFactorization::product() const {
  const ExtField& f = *field;
  ModPoly out = ModPoly::constant(f, unit);
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) out = out * g;
  }
  return out;
}

namespace {

// g(t) = sum a_{ip} t^{ip}  ->  sum a_{ip}^{1/p} t^i
ModPoly pth_root(const ModPoly& g) {
  const ExtField& f = g.field();
  const u64 p = f.p();
  std::vector<u64> out(g.degree() / static_cast<int>(p) + 1, 0);
  for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) {
    u64 v = g.coeff(i);
    for (int j = 0; j + 1 < f.k(); ++j) v = f.frobenius(v);
    out[i / p] = v;
  }
  return ModPoly(f, std::move(out));
}

void squarefree_parts(const ModPoly& f, int mult,
                      std::vector<std::pair<ModPoly, int>>& out) {
  const ExtField& field = f.field();
  const ModPoly one = ModPoly::constant(field, 1);
  ModPoly c = gcd(f, f.derivative());
  ModPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    squarefree_parts(pth_root(c.monic()), mult * static_cast<int>(field.p()),
                     out);
  }
}

// Splits a squarefree monic polynomial into products of same-degree factors.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
  const ExtField& field = f.field();
  const ModPoly t = ModPoly::monomial(field, 1);
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly h = t % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, field.size(), f);
    ModPoly g = gcd(h - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

ModPoly random_poly(const ExtField& field, int below_degree,
                    std::mt19937_64& rng) {
  std::vector<u64> c(below_degree);
  for (u64& v : c) v = rng() % field.size();
  return ModPoly(field, std::move(c));
}

void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const ExtField& field = f.field();
  const ModPoly one = ModPoly::constant(field, 1);
  while (true) {
    ModPoly a = random_poly(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModPoly g(field);
    if (field.p() == 2) {
      // Absolute trace down to F_2 over the degree-d extension.
      ModPoly b = a, acc = a;
      const int steps = field.k() * d;
      for (int i = 1; i < steps; ++i) {
        b = (b * b) % f;
        acc = acc + b;
      }
      g = gcd(acc, f);
    } else {
      // a^((Q^d - 1)/2) = (a^(1 + Q + ... + Q^{d-1}))^((Q - 1)/2)
      ModPoly norm = a % f, conj = a % f;
      for (int i = 1; i < d; ++i) {
        conj = powmod(conj, field.size(), f);
        norm = (norm * conj) % f;
      }
      ModPoly b = powmod(norm, (field.size() - 1) / 2, f);
      g = gcd(b - one, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

ModFactorization factor_mod(const ModPoly& f, u64 seed) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "factor_mod of zero");
  ModFactorization result;
  result.field = &f.field();
  result.unit = f.lead();
  if (f.degree() == 0) return result;

  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModPoly, int>> parts;
  squarefree_parts(f.monic(), 1, parts);

  std::vector<ModFactor> raw;
  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) raw.push_back({std::move(g), mult});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const ModFactor& a, const ModFactor& b) {
    return a.factor.canonical_less(b.factor);
  });
  for (auto& fac : raw) {
    if (!result.factors.empty() && result.factors.back().factor == fac.factor) {
      result.factors.back().multiplicity += fac.multiplicity;
    } else {
      result.factors.push_back(std::move(fac));
    }
  }
  return result;
}

bool is_irreducible_mod(const ModPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "irreducibility of zero");
  const int n = f.degree();
  if (n < 1) {
    fail(ErrorCode::kInvalidArgument, "irreducibility needs degree >= 1");
  }
  if (n == 1) return true;
  const ExtField& field = f.field();
  const ModPoly g = f.monic();
  const ModPoly t = ModPoly::monomial(field, 1);
  // Rabin: g | t^{Q^n} - t and gcd(t^{Q^{n/q}} - t, g) = 1 for primes q | n.
  std::vector<ModPoly> frob{t % g};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), field.size(), g));
  if (!(frob[n] - t % g).is_zero()) return false;
  for (u64 q : prime_divisors(static_cast<u64>(n))) {
    if (gcd(frob[n / q] - t, g).degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const ModPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "squarefree test of zero");
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<u64> roots(const ModPoly& f, u64 seed) {
  std::vector<u64> out;
  for (const auto& [g, m] : factor_mod(f, seed).factors) {
    if (g.degree() == 1) out.push_back(g.field().neg(g.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frobsplit
