#include "frobsplit/torus.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "frobsplit/errors.hpp"
#include "frobsplit/modpoly.hpp"

namespace frobsplit {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

namespace {

constexpr u64 kFieldLimit = u64{1} << 40;

// Coordinates of a big field B over K = F_{ell^2} inside it, basis t^i.
struct KCoords {
  const ExtField& big;
  const ExtField& K;
  const ExtField& Fl;
  int half;  // [B : K]
  u64 iota;  // image in B of the generator of K
  int jnz;   // a position where iota has a nonzero coefficient, >= 1
  Matrix qinv;

  static KCoords make(const ExtField& big) {
    const u64 ell = big.p();
    const ExtField& K = make_field(ell, 2);
    const ExtField& Fl = make_field(ell, 1);
    const int half = big.k() / 2;
    const auto rts = roots(ModPoly(big, K.modulus()));
    if (rts.empty()) throw std::logic_error("F_{ell^2} does not embed");
    const u64 iota = rts.front();
    const Vec ic = big.coeffs(iota);
    int jnz = 1;
    while (ic[jnz] == 0) ++jnz;
    const int n = big.k();
    Matrix q(Fl, n);
    for (int i = 0; i < half; ++i) {
      const u64 ti = big.pow(ell, i);
      const Vec a = big.coeffs(ti);
      const Vec b = big.coeffs(big.mul(iota, ti));
      for (int row = 0; row < n; ++row) {
        q.set(row, i, a[row]);
        q.set(row, half + i, b[row]);
      }
    }
    const auto inv = q.inverse();
    if (!inv) throw std::logic_error("t^i, iota t^i is not a basis");
    return KCoords{big, K, Fl, half, iota, jnz, *inv};
  }

  Vec of(u64 z) const {
    const Vec c = big.coeffs(z);
    const int n = big.k();
    Vec y(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) y[i] = Fl.add(y[i], Fl.mul(qinv.at(i, j), c[j]));
    }
    Vec out(half);
    for (int i = 0; i < half; ++i) {
      const u64 kc[2] = {y[i], y[half + i]};
      out[i] = K.encode(kc);
    }
    return out;
  }

  // z must lie in the image of K.
  u64 restrict(u64 z) const {
    const Vec c = big.coeffs(z);
    const Vec ic = big.coeffs(iota);
    const u64 c1 = Fl.div(c[jnz], ic[jnz]);
    const u64 c0 = Fl.sub(c[0], Fl.mul(c1, ic[0]));
    const u64 kc[2] = {c0, c1};
    return K.encode(kc);
  }
};

u64 frob_pow(const ExtField& F, u64 z, int times) {
  for (int i = 0; i < times; ++i) z = F.frobenius(z);
  return z;
}

// sum_{k < count} z^(ell^(step k))
u64 trace(const ExtField& F, u64 z, int step, int count) {
  u64 s = 0;
  for (int k = 0; k < count; ++k) {
    s = F.add(s, z);
    z = frob_pow(F, z, step);
  }
  return s;
}

u64 basis_power(const ExtField& F, int i) { return F.pow(F.p(), static_cast<u64>(i)); }

// v^T G conj(w); conj is the identity for TypeC.
u64 form(const ExtField& F, const Matrix& g, const Vec& v, const Vec& w, bool hermitian) {
  const int n = g.n();
  u64 s = 0;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j] == 0 || g.at(i, j) == 0) continue;
      const u64 wj = hermitian ? F.frobenius(w[j]) : w[j];
      s = F.add(s, F.mul(F.mul(v[i], g.at(i, j)), wj));
    }
  }
  return s;
}

Vec axpy(const ExtField& F, const Vec& v, u64 a, const Vec& x) {
  Vec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.add(out[i], F.mul(a, x[i]));
  return out;
}

Vec scale(const ExtField& F, const Vec& v, u64 a) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = F.mul(a, v[i]);
  return out;
}

bool is_zero(const Vec& v) {
  for (u64 x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Vec> unit_vectors(int n) {
  std::vector<Vec> out(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

void drop_zero(std::vector<Vec>& vs) {
  std::erase_if(vs, is_zero);
}

// Columns b with b_k, b_{n-1-k} a hyperbolic pair of value 1.
Matrix symplectic_basis(const ExtField& F, const Matrix& gram) {
  const int n = gram.n();
  std::vector<Vec> rest = unit_vectors(n);
  Matrix p(F, n);
  for (int k = 0; k < n / 2; ++k) {
    const Vec u = rest.front();
    Vec w;
    for (const Vec& c : rest) {
      if (form(F, gram, u, c, false) != 0) {
        w = c;
        break;
      }
    }
    if (w.empty()) throw std::logic_error("degenerate alternating form");
    w = scale(F, w, F.inv(form(F, gram, u, w, false)));
    for (int i = 0; i < n; ++i) {
      p.set(i, k, u[i]);
      p.set(i, n - 1 - k, w[i]);
    }
    for (Vec& v : rest) {
      const u64 bw = form(F, gram, v, w, false);
      const u64 bu = form(F, gram, v, u, false);
      v = axpy(F, axpy(F, v, F.neg(bw), u), bu, w);
    }
    drop_zero(rest);
  }
  return p;
}

// Orthonormal columns for a Hermitian Gram matrix over F_{ell^2}.
Matrix unitary_basis(const ExtField& K, const Matrix& gram) {
  const int n = gram.n();
  const u64 ell = K.p();
  std::vector<Vec> rest = unit_vectors(n);
  Matrix p(K, n);
  for (int k = 0; k < n; ++k) {
    Vec v;
    for (const Vec& c : rest) {
      if (form(K, gram, c, c, true) != 0) {
        v = c;
        break;
      }
    }
    for (std::size_t i = 0; v.empty() && i < rest.size(); ++i) {
      for (std::size_t j = 0; v.empty() && j < rest.size(); ++j) {
        if (i == j) continue;
        for (u64 c = 1; c < K.size(); ++c) {
          Vec cand = axpy(K, rest[i], c, rest[j]);
          if (form(K, gram, cand, cand, true) != 0) {
            v = std::move(cand);
            break;
          }
        }
      }
    }
    if (v.empty()) throw std::logic_error("degenerate Hermitian form");
    const u64 s_inv = K.inv(form(K, gram, v, v, true));
    u64 a = 0;
    for (u64 c = 1; c < K.size(); ++c) {
      if (K.pow(c, ell + 1) == s_inv) {
        a = c;
        break;
      }
    }
    const Vec b = scale(K, v, a);
    for (int i = 0; i < n; ++i) p.set(i, k, b[i]);
    for (Vec& x : rest) x = axpy(K, x, K.neg(form(K, gram, x, b, true)), b);
    drop_zero(rest);
  }
  return p;
}

u64 element_order(const Matrix& m, u64 bound) {
  // Order of m given that m^bound = 1.
  for (u64 p : prime_divisors(bound)) {
    while (bound % p == 0 && m.pow(bound / p).is_identity()) bound /= p;
  }
  return bound;
}

struct Built {
  std::vector<Matrix> gens;  // in the original coordinates
  std::vector<u64> orders;
  std::vector<u64> similitudes;
  Matrix gram;
  int extension_degree;
  std::string construction;
};

std::string fq(u64 ell, int k) {
  return "F_{" + std::to_string(ell) + "^" + std::to_string(k) + "}";
}

Built build_cyclic(const GroupDescriptor& desc) {
  const u64 ell = desc.ell;
  const int r = desc.r;
  const ExtField& E = make_field(ell, 2 * r);
  const u64 size = E.size();
  const u64 lr1 = checked_power(ell, r) + 1;
  u64 mod = lr1;
  if (desc.level == Level::kSimilitude) {
    mod = lr1 * (ell - 1);
  } else if (desc.level == Level::kDerived && desc.family == Family::kA) {
    mod = std::gcd(lr1, (size - 1) / (ell * ell - 1));
  }
  const u64 g = E.primitive_element();
  const u64 x = E.pow(g, (size - 1) / mod);
  const u64 lambda = E.pow(x, lr1);
  std::string construction = "multiplication by a generator of the " + std::to_string(mod) +
                             "-torsion of " + fq(ell, 2 * r) + "^x";

  if (desc.family == Family::kC) {
    const ExtField& Fl = make_field(ell, 1);
    const int n = 2 * r;
    const u64 c = ell == 2 ? 1 : E.pow(g, (lr1) / 2);
    Matrix m(Fl, n);
    Matrix gram(Fl, n);
    for (int i = 0; i < n; ++i) {
      const Vec col = E.coeffs(E.mul(x, basis_power(E, i)));
      for (int row = 0; row < n; ++row) m.set(row, i, col[row]);
      for (int j = 0; j < n; ++j) {
        const u64 z = E.mul(c, E.mul(basis_power(E, i), frob_pow(E, basis_power(E, j), r)));
        gram.set(i, j, trace(E, z, 1, n));
      }
    }
    return {{m}, {mod}, {lambda}, gram, 2 * r, construction};
  }

  const KCoords kc = KCoords::make(E);
  const ExtField& K = kc.K;
  Matrix m(K, r);
  Matrix gram(K, r);
  for (int i = 0; i < r; ++i) {
    const Vec col = kc.of(E.mul(x, basis_power(E, i)));
    for (int row = 0; row < r; ++row) m.set(row, i, col[row]);
    for (int j = 0; j < r; ++j) {
      const u64 z = E.mul(basis_power(E, i), frob_pow(E, basis_power(E, j), r));
      gram.set(i, j, kc.restrict(trace(E, z, 2, r)));
    }
  }
  return {{m}, {mod}, {lambda}, gram, 2 * r, construction};
}

Built build_dual_pair(const GroupDescriptor& desc) {
  const u64 ell = desc.ell;
  const int r = desc.r;
  const int h = r / 2;
  const ExtField& L = make_field(ell, r);
  const KCoords kc = KCoords::make(L);
  const ExtField& K = kc.K;
  const u64 lr = L.size() - 1;
  const u64 gl = L.primitive_element();

  auto phi_inv = [&](u64 z) { return frob_pow(L, z, r - 1); };
  auto element = [&](u64 x, u64 lambda) {
    const u64 y = phi_inv(L.div(lambda, x));
    Matrix m(K, r);
    for (int i = 0; i < h; ++i) {
      const Vec a = kc.of(L.mul(x, basis_power(L, i)));
      const Vec b = kc.of(L.mul(y, basis_power(L, i)));
      for (int row = 0; row < h; ++row) {
        m.set(row, i, a[row]);
        m.set(h + row, h + i, b[row]);
      }
    }
    return m;
  };

  Matrix gram(K, r);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      const u64 ef = L.mul(basis_power(L, i), L.frobenius(basis_power(L, j)));
      gram.set(i, h + j, kc.restrict(trace(L, ef, 2, h)));
      const u64 fe = L.mul(basis_power(L, j), L.frobenius(basis_power(L, i)));
      gram.set(h + i, j, K.frobenius(kc.restrict(trace(L, fe, 2, h))));
    }
  }

  Built b{{}, {}, {}, gram, r, ""};
  auto add = [&](u64 x, u64 lambda, u64 order) {
    if (order <= 1) return;
    b.gens.push_back(element(x, lambda));
    b.orders.push_back(order);
    b.similitudes.push_back(lambda);
  };
  switch (desc.level) {
    case Level::kSimilitude:
      add(gl, 1, lr);
      add(1, make_field(ell, 1).primitive_element(), ell - 1);
      b.construction = "(x, lambda) on " + fq(ell, r) + " + " + fq(ell, r) +
                       ", x in " + fq(ell, r) + "^x, lambda in F_" + std::to_string(ell) + "^x";
      break;
    case Level::kIsometry:
      add(gl, 1, lr);
      b.construction = "(x, 1) on " + fq(ell, r) + " + " + fq(ell, r) + ", x in " + fq(ell, r) + "^x";
      break;
    case Level::kDerived:
      add(L.pow(gl, ell + 1), 1, lr / (ell + 1));
      b.construction = "(x, 1) on " + fq(ell, r) + " + " + fq(ell, r) + ", x in the index-" +
                       std::to_string(ell + 1) + " subgroup of " + fq(ell, r) + "^x";
      break;
  }
  return b;
}

}  // namespace

void AnisotropicTorus::for_each(const std::function<void(const GroupElement&)>& f,
                                u64 budget) const {
  if (order > budget) {
    fail(ErrorCode::kBudgetExceeded, "torus of " + desc.name() + " has " + std::to_string(order) +
                                         " elements, budget " + std::to_string(budget));
  }
  const ExtField& F = desc.base();
  const GroupElement one{desc, Matrix::identity(F, desc.dim()), 1};
  std::function<void(std::size_t, const GroupElement&)> rec = [&](std::size_t k,
                                                                  const GroupElement& cur) {
    if (k == generators.size()) {
      f(cur);
      return;
    }
    GroupElement e = cur;
    for (u64 i = 0; i < generator_orders[k]; ++i) {
      rec(k + 1, e);
      e = e * generators[k];
    }
  };
  rec(0, one);
}

std::vector<GroupElement> AnisotropicTorus::elements(u64 budget) const {
  std::vector<GroupElement> out;
  out.reserve(order <= budget ? order : 0);
  for_each([&](const GroupElement& g) { out.push_back(g); }, budget);
  return out;
}

AnisotropicTorus build_anisotropic_torus(const GroupDescriptor& desc) {
  const int ext = desc.family == Family::kA && desc.r % 2 == 0 ? desc.r : 2 * desc.r;
  const mpz_class fsize = [&] {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), desc.ell, ext);
    return s;
  }();
  if (fsize > mpz_class(static_cast<unsigned long>(kFieldLimit))) {
    fail(ErrorCode::kBudgetExceeded, "eigenvalue field " + fq(desc.ell, ext) + " is too large");
  }
  const bool dual_pair = desc.family == Family::kA && desc.r % 2 == 0;
  Built b = dual_pair ? build_dual_pair(desc) : build_cyclic(desc);

  const ExtField& F = desc.base();
  const Matrix p = desc.family == Family::kC ? symplectic_basis(F, b.gram) : unitary_basis(F, b.gram);
  const Matrix pinv = *p.inverse();

  AnisotropicTorus t{desc, {}, b.orders, 1, b.extension_degree, b.construction, p};
  for (std::size_t i = 0; i < b.gens.size(); ++i) {
    const Matrix m = pinv * b.gens[i] * p;
    const auto el = contains(desc, m);
    if (!el || el->similitude != b.similitudes[i]) {
      throw std::logic_error("torus generator is not in " + desc.name());
    }
    if (element_order(m, b.orders[i]) != b.orders[i]) {
      throw std::logic_error("torus generator has the wrong order in " + desc.name());
    }
    t.generators.push_back(*el);
    t.order *= b.orders[i];
  }
  return t;
}

std::string_view element_class_name(ElementClass c) { return c == ElementClass::kJ ? "J" : "I"; }

namespace {

ModPoly lambda_dual(const ModPoly& h, u64 lambda) {
  const ExtField& F = h.field();
  const int n = h.degree();
  Vec c(n + 1, 0);
  u64 lp = 1;
  for (int i = 0; i <= n; ++i) {
    c[n - i] = F.mul(h.coeff(i), lp);
    lp = F.mul(lp, lambda);
  }
  return ModPoly(F, c).monic();
}

}  // namespace

ElementClass classify_element(const GroupElement& x, u64 m) {
  const GroupElement y = x.pow(m);
  const GroupDescriptor& d = y.desc;
  const ExtField& F = d.base();
  const ModPoly p(F, y.matrix.charpoly());
  if (d.family == Family::kC) return is_irreducible_mod(p) ? ElementClass::kJ : ElementClass::kI;
  if (d.r % 2 == 1) {
    const ModPoly n = p * p.frobenius_coeffs(1);
    Vec c = n.coeffs();
    for (u64 v : c) {
      if (v >= d.ell) throw std::logic_error("norm polynomial not over F_ell");
    }
    return is_irreducible_mod(ModPoly(make_field(d.ell, 1), c)) ? ElementClass::kJ
                                                                 : ElementClass::kI;
  }
  const ModFactorization fac = factor_mod(p);
  if (fac.factors.size() != 2) return ElementClass::kI;
  for (const auto& f : fac.factors) {
    if (f.multiplicity != 1 || f.factor.degree() != d.r / 2) return ElementClass::kI;
  }
  const ModPoly& g1 = fac.factors[0].factor;
  const ModPoly& g2 = fac.factors[1].factor;
  return g2 == lambda_dual(g1.frobenius_coeffs(1), y.similitude) ? ElementClass::kJ
                                                                 : ElementClass::kI;
}

ClassificationOracle::ClassificationOracle(const GroupDescriptor& desc, u64 budget)
    : desc_(desc), budget_(budget) {
  const mpz_class order = group_order(desc);
  if (order > mpz_class(static_cast<unsigned long>(budget))) {
    fail(ErrorCode::kBudgetExceeded,
         desc.name() + " has " + order.get_str() + " elements, budget " + std::to_string(budget));
  }
  group_order_ = order.get_ui();
  torus_order_ = build_anisotropic_torus(desc).order;
}

const std::vector<Matrix>& ClassificationOracle::group() const {
  std::call_once(once_, [this] { group_ = enumerate_group(desc_, budget_); });
  return group_;
}

std::vector<Matrix> ClassificationOracle::centralizer(const Matrix& y) const {
  const auto basis = intertwiners(y, y);
  const ExtField& F = desc_.base();
  const int d = static_cast<int>(basis.size());
  mpz_class span;
  mpz_ui_pow_ui(span.get_mpz_t(), F.size(), d);
  std::vector<Matrix> out;
  if (span <= mpz_class(static_cast<unsigned long>(group_order_))) {
    const u64 count = span.get_ui();
    const int n = desc_.dim();
    for (u64 idx = 1; idx < count; ++idx) {
      Matrix m(F, n);
      u64 rest = idx;
      for (int k = 0; k < d; ++k) {
        const u64 c = rest % F.size();
        rest /= F.size();
        if (c != 0) m = m + basis[k].scaled(c);
      }
      if (m.det() == 0) continue;
      if (contains(desc_, m)) out.push_back(std::move(m));
    }
    return out;
  }
  for (const Matrix& g : group()) {
    if (g * y == y * g) out.push_back(g);
  }
  return out;
}

ElementClass ClassificationOracle::classify(const GroupElement& x, u64 m) const {
  const Matrix y = x.matrix.pow(m);
  const auto c = centralizer(y);
  if (c.size() != torus_order_) return ElementClass::kI;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] * c[j] != c[j] * c[i]) return ElementClass::kI;
    }
  }
  return ElementClass::kJ;
}

ClassCount classify_group(const GroupDescriptor& desc, u64 m, u64 budget) {
  const auto all = enumerate_group(desc, budget);
  ClassCount out{all.size(), 0};
  for (const Matrix& g : all) {
    const auto el = contains(desc, g);
    if (classify_element(*el, m) == ElementClass::kJ) ++out.j_count;
  }
  return out;
}

namespace {

NormalizerCensus normalizer_by_enumeration(const GroupDescriptor& desc, const AnisotropicTorus& t,
                                           u64 budget) {
  std::unordered_set<Matrix, MatrixHash> members;
  t.for_each([&](const GroupElement& e) { members.insert(e.matrix); });
  u64 count = 0;
  for (const Matrix& g : enumerate_group(desc, budget)) {
    const Matrix gi = *g.inverse();
    bool ok = true;
    for (const auto& gen : t.generators) {
      if (!members.contains(g * gen.matrix * gi)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return {count, count / t.order, "enumeration"};
}

NormalizerCensus normalizer_by_cosets(const GroupDescriptor& desc, const AnisotropicTorus& t) {
  const auto elems = t.elements();
  const GroupElement* regular = nullptr;
  GroupElement prod = elems.front();
  for (const auto& g : t.generators) prod = prod * g;
  if (classify_element(prod, 1) == ElementClass::kJ) {
    regular = &prod;
  } else {
    for (const auto& e : elems) {
      if (classify_element(e, 1) == ElementClass::kJ) {
        regular = &e;
        break;
      }
    }
  }
  if (!regular) fail(ErrorCode::kBudgetExceeded, "no regular element in the torus");
  const ExtField& F = desc.base();
  const int n = desc.dim();
  const auto cp = regular->matrix.charpoly();
  u64 cosets = 0;
  for (const auto& s : elems) {
    if (s.similitude != regular->similitude || s.matrix.charpoly() != cp) continue;
    const auto basis = intertwiners(regular->matrix, s.matrix);
    const int d = static_cast<int>(basis.size());
    mpz_class span;
    mpz_ui_pow_ui(span.get_mpz_t(), F.size(), d);
    if (span > mpz_class(static_cast<unsigned long>(kTorusBudget))) {
      fail(ErrorCode::kBudgetExceeded, "intertwiner space of " + desc.name() + " too large");
    }
    const u64 count = span.get_ui();
    for (u64 idx = 1; idx < count; ++idx) {
      Matrix m(F, n);
      u64 rest = idx;
      for (int k = 0; k < d; ++k) {
        const u64 c = rest % F.size();
        rest /= F.size();
        if (c != 0) m = m + basis[k].scaled(c);
      }
      if (m.det() != 0 && contains(desc, m)) {
        ++cosets;
        break;
      }
    }
  }
  return {cosets * t.order, cosets, "coset"};
}

}  // namespace

NormalizerCensus normalizer_census(const GroupDescriptor& desc, NormalizerMethod method,
                                   u64 budget) {
  const AnisotropicTorus t = build_anisotropic_torus(desc);
  const bool small = group_order(desc) <= mpz_class(static_cast<unsigned long>(budget));
  if (method == NormalizerMethod::kEnumerate || (method == NormalizerMethod::kAuto && small)) {
    return normalizer_by_enumeration(desc, t, budget);
  }
  return normalizer_by_cosets(desc, t);
}

WeylStability weyl_stability(Family family, int r, Level level, const std::vector<u64>& primes) {
  WeylStability out;
  for (u64 ell : primes) {
    out.primes.push_back(ell);
    out.weyl_orders.push_back(normalizer_census(make_descriptor(family, r, ell, level)).weyl_order);
  }
  out.stable = !out.weyl_orders.empty();
  for (u64 w : out.weyl_orders) out.stable = out.stable && w == out.weyl_orders.front();
  return out;
}

TorusCensus torus_census(const GroupDescriptor& desc, u64 m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "m must be >= 1");
  const AnisotropicTorus t = build_anisotropic_torus(desc);
  TorusCensus c;
  c.desc = desc;
  c.m = m;
  c.torus_order = t.order;
  t.for_each([&](const GroupElement& e) {
    const bool regular = classify_element(e, 1) == ElementClass::kJ;
    if (regular) ++c.regular_count;
    if (m == 1 ? regular : classify_element(e, m) == ElementClass::kJ) ++c.regular_count_m;
  });
  const NormalizerCensus nc = normalizer_census(desc);
  c.normalizer_order = nc.normalizer_order;
  c.weyl_order = nc.weyl_order;
  c.normalizer_method = nc.method;
  c.b_estimate = mpq_class(static_cast<unsigned long>(desc.ell)) *
                 (1 - mpq_class(static_cast<unsigned long>(c.regular_count),
                                static_cast<unsigned long>(c.torus_order)));
  c.b_estimate.canonicalize();
  return c;
}

}  // namespace frobsplit
