#include "frobsplit/groups.hpp"

#include "frobsplit/errors.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

const ExtField& GroupDescriptor::base() const {
  return make_field(ell, family == Family::kC ? 1 : 2);
}

GroupDescriptor GroupDescriptor::at_level(Level l) const {
  GroupDescriptor d = *this;
  d.level = l;
  return d;
}

GroupDescriptor GroupDescriptor::with_ell(u64 l) const {
  return make_descriptor(family, r, l, level);
}

std::string_view family_name(Family f) { return f == Family::kA ? "A" : "C"; }

std::string_view level_name(Level l) {
  switch (l) {
    case Level::kSimilitude: return "similitude";
    case Level::kIsometry: return "isometry";
    case Level::kDerived: return "derived";
  }
  return "?";
}

std::string GroupDescriptor::name() const {
  std::string g;
  if (family == Family::kC) {
    g = level == Level::kSimilitude ? "GSp_" : "Sp_";
    return g + std::to_string(2 * r) + "(F_" + std::to_string(ell) + ")";
  }
  switch (level) {
    case Level::kSimilitude: g = "GU_"; break;
    case Level::kIsometry: g = "U_"; break;
    case Level::kDerived: g = "SU_"; break;
  }
  return g + std::to_string(r) + "(F_" + std::to_string(ell * ell) + ")";
}

GroupDescriptor make_descriptor(Family family, int r, u64 ell, Level level) {
  if (!is_prime(ell)) fail(ErrorCode::kCompositeModulus, std::to_string(ell) + " is not prime");
  if (r < 1) fail(ErrorCode::kInvalidArgument, "rank must be >= 1");
  if (family == Family::kA && ell > 65535) {
    fail(ErrorCode::kOverflow, "F_{ell^2} must stay below 2^32");
  }
  GroupDescriptor d{family, r, ell, level};
  (void)d.base();
  return d;
}

mpz_class group_order(const GroupDescriptor& desc) {
  const mpz_class q(static_cast<unsigned long>(desc.ell));
  const int r = desc.r;
  mpz_class out;
  if (desc.family == Family::kC) {
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(r) * r);
    for (int i = 1; i <= r; ++i) {
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), 2 * i);
      out *= t - 1;
    }
    if (desc.level == Level::kSimilitude) out *= q - 1;
    return out;
  }
  mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(r) * (r - 1) / 2);
  for (int i = 1; i <= r; ++i) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), i);
    out *= (i % 2 == 0) ? mpz_class(t - 1) : mpz_class(t + 1);
  }
  if (desc.level == Level::kSimilitude) out *= q - 1;
  if (desc.level == Level::kDerived) out /= q + 1;
  return out;
}

Matrix standard_form(const GroupDescriptor& desc) {
  const ExtField& F = desc.base();
  const int n = desc.dim();
  if (desc.family == Family::kA) return Matrix::identity(F, n);
  Matrix j(F, n);
  for (int i = 0; i < n; ++i) j.set(i, n - 1 - i, i < desc.r ? 1 : F.neg(1));
  return j;
}

Matrix form_image(const GroupDescriptor& desc, const Matrix& m) {
  const Matrix j = standard_form(desc);
  const Matrix right = desc.family == Family::kA ? m.frobenius(1) : m;
  return m.transpose() * j * right;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return {desc, matrix * o.matrix, desc.base().mul(similitude, o.similitude)};
}

GroupElement GroupElement::inverse() const {
  const auto inv = matrix.inverse();
  if (!inv) fail(ErrorCode::kDivisionByZero, "singular group element");
  return {desc, *inv, desc.base().inv(similitude)};
}

GroupElement GroupElement::pow(u64 e) const {
  return {desc, matrix.pow(e), desc.base().pow(similitude, e)};
}

std::optional<GroupElement> contains(const GroupDescriptor& desc, const Matrix& m) {
  const ExtField& F = desc.base();
  if (&m.field() != &F) {
    fail(ErrorCode::kFieldMismatch, "matrix is not over the base field of " + desc.name());
  }
  if (m.n() != desc.dim()) {
    fail(ErrorCode::kDimensionMismatch,
         "expected " + std::to_string(desc.dim()) + "x" + std::to_string(desc.dim()));
  }
  const Matrix img = form_image(desc, m);
  const Matrix j = standard_form(desc);
  const int n = desc.dim();
  const int j0 = desc.family == Family::kA ? 0 : n - 1;
  const u64 lambda = F.div(img.at(0, j0), j.at(0, j0));
  if (lambda == 0 || lambda >= desc.ell) return std::nullopt;  // not in F_ell^x
  if (img != j.scaled(lambda)) return std::nullopt;
  if (desc.level != Level::kSimilitude && lambda != 1) return std::nullopt;
  if (desc.level == Level::kDerived && desc.family == Family::kA && m.det() != 1) {
    return std::nullopt;
  }
  return GroupElement{desc, m, lambda};
}

namespace {

// x^T J y, or x^T conj(y) for the Hermitian identity form.
u64 form_value(const GroupDescriptor& desc, const ExtField& F, const Matrix& j,
               const std::vector<u64>& x, const std::vector<u64>& y) {
  const int n = static_cast<int>(x.size());
  u64 s = 0;
  if (desc.family == Family::kA) {
    for (int i = 0; i < n; ++i) s = F.add(s, F.mul(x[i], F.frobenius(y[i])));
    return s;
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    const u64 yi = y[n - 1 - i];
    if (yi == 0) continue;
    s = F.add(s, F.mul(F.mul(x[i], j.at(i, n - 1 - i)), yi));
  }
  return s;
}

struct Enumerator {
  const GroupDescriptor& desc;
  const ExtField& F;
  Matrix j;
  int n;
  std::vector<std::vector<u64>> vectors;
  std::vector<const std::vector<u64>*> cols;
  std::vector<Matrix>* out;
  u64 lambda = 1;

  void run(int i) {
    if (i == n) {
      Matrix m(F, n);
      for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) m.set(r, c, (*cols[c])[r]);
      }
      if (desc.level == Level::kDerived && desc.family == Family::kA && m.det() != 1) return;
      out->push_back(std::move(m));
      return;
    }
    for (const auto& v : vectors) {
      bool ok = form_value(desc, F, j, v, v) == F.mul(lambda, j.at(i, i));
      for (int c = 0; ok && c < i; ++c) {
        ok = form_value(desc, F, j, *cols[c], v) == F.mul(lambda, j.at(c, i));
      }
      if (!ok) continue;
      cols[i] = &v;
      run(i + 1);
    }
  }
};

}  // namespace

std::vector<Matrix> enumerate_group(const GroupDescriptor& desc, u64 budget) {
  const mpz_class order = group_order(desc);
  if (order > mpz_class(static_cast<unsigned long>(budget))) {
    fail(ErrorCode::kBudgetExceeded,
         desc.name() + " has " + order.get_str() + " elements, budget " + std::to_string(budget));
  }
  const ExtField& F = desc.base();
  const int n = desc.dim();
  Enumerator e{desc, F, standard_form(desc), n, {}, std::vector<const std::vector<u64>*>(n), nullptr};
  // Nonzero vectors in lexicographic order of their encoded entries.
  u64 count = 1;
  for (int i = 0; i < n; ++i) count *= F.size();
  for (u64 idx = 1; idx < count; ++idx) {
    std::vector<u64> v(n);
    u64 x = idx;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = x % F.size();
      x /= F.size();
    }
    e.vectors.push_back(std::move(v));
  }
  std::vector<Matrix> out;
  out.reserve(order.get_ui());
  e.out = &out;
  if (desc.level == Level::kSimilitude) {
    for (u64 l = 1; l < desc.ell; ++l) {
      e.lambda = l;
      e.run(0);
    }
  } else {
    e.run(0);
  }
  if (out.size() != order.get_ui()) {
    throw std::logic_error("enumeration of " + desc.name() + " found " +
                           std::to_string(out.size()) + " elements, formula " + order.get_str());
  }
  return out;
}

}  // namespace frobsplit
