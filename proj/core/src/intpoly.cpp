#include "frobsplit/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "frobsplit/errors.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<mpz_class> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(pos, comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (!token.empty() && token[0] == '+') token.erase(0, 1);
    mpz_class v;
    if (token.empty() || v.set_str(token, 10) != 0) {
      fail(ErrorCode::kParse,
           "bad coefficient '" + token + "' in \"" + std::string(text) + "\"");
    }
    c.push_back(v);
    pos = comma + 1;
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> out = c_;
  for (auto& v : out) v = -v;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(int e) const {
  IntPoly result{1}, base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
  std::vector<mpz_class> out = c_;
  for (auto& v : out) v *= s;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  }
  return IntPoly(std::move(out));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

mpz_class IntPoly::content() const {
  if (c_.empty()) return 0;
  mpz_class g = 0;
  for (const auto& v : c_) g = gcd(g, v);
  return c_.back() < 0 ? mpz_class(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return {};
  const mpz_class c = content();
  std::vector<mpz_class> out = c_;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

RatPoly IntPoly::to_rational() const {
  std::vector<mpq_class> out(c_.begin(), c_.end());
  return RatPoly(std::move(out));
}

bool IntPoly::canonical_less(const IntPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(),
                                      o.c_.end());
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

std::string IntPoly::pretty(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    mpz_class mag = abs(v);
    if (v < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<mpq_class> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<mpq_class> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpq_class> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
  std::vector<mpq_class> out = c_;
  for (auto& v : out) v = -v;
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<mpq_class> rem = c_;
  std::vector<mpq_class> quot(c_.size() - d.c_.size() + 1, 0);
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    const mpq_class q = rem[i] / d.lead();
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::pow(int e) const {
  RatPoly result(std::vector<mpq_class>{1}), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<mpq_class> out = c_;
  const mpq_class l = c_.back();
  for (auto& v : out) v /= l;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  }
  return RatPoly(std::move(out));
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

bool RatPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& v) { return v.get_den() == 1; });
}

IntPoly RatPoly::to_integer() const {
  assert(is_integral());
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.get_num());
  return IntPoly(std::move(out));
}

IntPoly RatPoly::primitive_integer() const {
  if (c_.empty()) return {};
  mpz_class den = 1;
  for (const auto& v : c_) den = lcm(den, mpz_class(v.get_den()));
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.get_num() * (den / v.get_den()));
  return IntPoly(std::move(out)).primitive_part();
}

std::string RatPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) fail(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<mpz_class> rem = f.coeffs();
  std::vector<mpz_class> quot(f.degree() - g.degree() + 1, 0);
  const int dg = g.degree();
  const mpz_class& lg = g.lead();
  for (int i = f.degree(); i >= dg; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lg.get_mpz_t());
    quot[i - dg] = q;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeffs()[j];
  }
  for (int i = 0; i < dg; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreePart> out;
  if (f.degree() == 0) return out;
  const RatPoly F = f.to_rational();
  const RatPoly dF = F.derivative();
  RatPoly a = gcd(F, dF);
  RatPoly b = F / a;
  RatPoly c = dF / a;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a.primitive_integer(), i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

ReducedPoly reduce_mod(const IntPoly& f, u64 ell) {
  const ExtField& field = make_field(ell, 1);
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), ell);
    c.push_back(r.get_ui());
  }
  ModPoly reduced(field, std::move(c));
  return {reduced, reduced.degree() < f.degree()};
}

IntPoly IntFactorization::product() const {
  IntPoly out = IntPoly::monomial(0, content);
  for (const auto& [g, m] : factors) out = out * g.pow(m);
  return out;
}

// ------------------------------------------------------------ Zassenhaus

namespace {

IntPoly from_mod(const ModPoly& g) {
  std::vector<mpz_class> c;
  c.reserve(g.coeffs().size());
  for (u64 v : g.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

ModPoly to_mod(const IntPoly& g, const ExtField& field) {
  return reduce_mod(g, field.p()).poly;
}

IntPoly reduce_coeffs(const IntPoly& g, const mpz_class& m) {
  std::vector<mpz_class> c = g.coeffs();
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly symmetric_coeffs(const IntPoly& g, const mpz_class& m) {
  std::vector<mpz_class> c = g.coeffs();
  const mpz_class half = m / 2;
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// F == g0 * h0 (mod p) with g0, h0 monic and coprime.  Returns monic g, h with
// F == g * h (mod p^a).  F must be monic modulo p^a.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& F, const ModPoly& g0,
                                        const ModPoly& h0, u64 p, int a) {
  const ExtField& field = g0.field();
  const ExtendedGcd eg = extended_gcd(g0, h0);
  IntPoly g = from_mod(g0), h = from_mod(h0);
  mpz_class pk = p;
  for (int j = 1; j < a; ++j) {
    IntPoly diff = F - g * h;
    std::vector<mpz_class> c = diff.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
    const ModPoly e = to_mod(IntPoly(std::move(c)), field);
    const ModPoly dg = (eg.t * e) % g0;
    const ModPoly dh = (e - dg * h0) / g0;
    g = g + from_mod(dg).scaled(pk);
    h = h + from_mod(dh).scaled(pk);
    pk *= p;
  }
  return {reduce_coeffs(g, pk), reduce_coeffs(h, pk)};
}

void hensel_all(const IntPoly& F, const std::vector<ModPoly>& factors,
                std::size_t lo, std::size_t hi, u64 p, int a,
                const mpz_class& modulus, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = reduce_coeffs(F, modulus);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const ExtField& field = factors[lo].field();
  ModPoly g0 = ModPoly::constant(field, 1), h0 = ModPoly::constant(field, 1);
  for (std::size_t i = lo; i < mid; ++i) g0 = g0 * factors[i];
  for (std::size_t i = mid; i < hi; ++i) h0 = h0 * factors[i];
  auto [g, h] = hensel_pair(F, g0, h0, p, a);
  hensel_all(g, factors, lo, mid, p, a, modulus, out);
  hensel_all(h, factors, mid, hi, p, a, modulus, out);
}

// |coefficient| bound for lead(f) times any factor of f.
mpz_class mignotte_bound(const IntPoly& f) {
  mpz_class norm2 = 0;
  for (const auto& v : f.coeffs()) norm2 += v * v;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), f.degree());
  return abs(f.lead()) * pow2 * root;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f primitive, squarefree, degree >= 2, positive leading coefficient.
std::vector<IntPoly> zassenhaus(IntPoly f, const FactorOptions& opts) {
  // Pick the admissible prime with the fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = std::max<u64>(2, opts.first_prime); tried < opts.candidate_primes;
       ++p) {
    if (!is_prime(p)) continue;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f.lead().get_mpz_t(), p);
    if (r == 0) continue;
    const ModPoly fp = reduce_mod(f, p).poly;
    if (!is_squarefree(fp)) continue;
    ++tried;
    std::vector<ModPoly> facs;
    for (auto& [g, m] : factor_mod(fp, opts.seed).factors) facs.push_back(g);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {f};

  const u64 p = best_p;
  const mpz_class bound = 2 * mignotte_bound(f) + 1;
  int a = 1;
  mpz_class modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++a;
  }
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.lead().get_mpz_t(), modulus.get_mpz_t());
  const IntPoly F = reduce_coeffs(f.scaled(lc_inv), modulus);

  std::vector<IntPoly> lifted(best.size());
  hensel_all(F, best, 0, best.size(), p, a, modulus, lifted);

  std::vector<IntPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool matched = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      IntPoly g = IntPoly::monomial(0, f.lead());
      for (std::size_t i : idx) g = reduce_coeffs(g * lifted[i], modulus);
      g = symmetric_coeffs(g, modulus).primitive_part();
      // Cheap constant-term test before full division.
      if (g.coeff(0) != 0 && f.coeff(0) != 0 &&
          !mpz_divisible_p(f.coeff(0).get_mpz_t(), g.coeff(0).get_mpz_t())) {
        continue;
      }
      if (auto q = exact_divide(f, g)) {
        found.push_back(g);
        f = *q;
        std::vector<IntPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) {
            rest.push_back(lifted[i]);
          }
        }
        lifted = std::move(rest);
        matched = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!matched) ++s;
  }
  if (f.degree() > 0) found.push_back(f.primitive_part());
  return found;
}

}  // namespace

IntFactorization factor_over_Z(const IntPoly& f, const FactorOptions& opts) {
  if (f.is_zero()) fail(ErrorCode::kZeroPolynomial, "factor_over_Z of zero");
  IntFactorization result;
  result.content = f.content();
  if (f.degree() == 0) {
    result.content = f.lead();
    return result;
  }
  std::vector<IntFactor> raw;
  for (const auto& [part, mult] : squarefree_decomposition(f.primitive_part())) {
    if (part.degree() == 1) {
      raw.push_back({part, mult});
      continue;
    }
    for (auto& g : zassenhaus(part, opts)) raw.push_back({std::move(g), mult});
  }
  for (auto& fac : raw) {
    if (fac.factor.lead() < 0) fac.factor = -fac.factor;
  }
  std::sort(raw.begin(), raw.end(), [](const IntFactor& a, const IntFactor& b) {
    return a.factor.canonical_less(b.factor);
  });
  for (auto& fac : raw) {
    if (!result.factors.empty() && result.factors.back().factor == fac.factor) {
      result.factors.back().multiplicity += fac.multiplicity;
    } else {
      result.factors.push_back(std::move(fac));
    }
  }
  // Restore the sign lost to positive-leading normalization.
  if (result.product().lead() != f.lead()) result.content = -result.content;
  return result;
}

// ------------------------------------------------------------ power roots

std::optional<IntPoly> dth_root(const IntPoly& f, int d) {
  if (!f.is_monic()) fail(ErrorCode::kNotMonic, "dth_root needs a monic input");
  if (d < 1) fail(ErrorCode::kInvalidArgument, "root degree must be >= 1");
  if (f.degree() % d != 0) {
    fail(ErrorCode::kDegreeNotDivisible,
         "degree " + std::to_string(f.degree()) + " not divisible by " +
             std::to_string(d));
  }
  if (d == 1) return f;
  const int n = f.degree() / d;
  const int top = f.degree();
  // Solve for the coefficients of g from the top down: the coefficient of
  // t^{top-j} in g^d is d*b_{n-j} plus terms in already known b's.
  std::vector<mpq_class> b(n + 1, 0);
  b[n] = 1;
  for (int j = 1; j <= n; ++j) {
    const RatPoly partial(b);
    const mpq_class known = partial.pow(d).coeff(top - j);
    b[n - j] = (mpq_class(f.coeff(top - j)) - known) / d;
  }
  const RatPoly g(b);
  if (!(g.pow(d) == f.to_rational())) return std::nullopt;
  // A monic rational d-th root of a monic integer polynomial is integral.
  if (!g.is_integral()) {
    throw std::logic_error("non-integral d-th root of monic " + f.to_string());
  }
  return g.to_integer();
}

PowerStructure max_power_structure(const IntPoly& f) {
  if (!f.is_monic()) {
    fail(ErrorCode::kNotMonic, "max_power_structure needs a monic input");
  }
  const int n = f.degree();
  if (n < 1) fail(ErrorCode::kInvalidArgument, "degree must be >= 1");
  for (int d = n; d >= 2; --d) {
    if (n % d != 0) continue;
    if (auto g = dth_root(f, d)) return {*g, d};
  }
  return {f, 1};
}

}  // namespace frobsplit
