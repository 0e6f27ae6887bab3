#include "frobsplit/matrix.hpp"

#include <sstream>

#include "frobsplit/errors.hpp"

namespace frobsplit {

using u64 = std::uint64_t;

Matrix::Matrix(const ExtField& field, int n)
    : field_(&field), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (field.size() >= (u64{1} << 32)) {
    fail(ErrorCode::kOverflow, "matrix entries need a field below 2^32");
  }
}

Matrix Matrix::identity(const ExtField& field, int n) { return scalar(field, n, 1); }

Matrix Matrix::scalar(const ExtField& field, int n, u64 c) {
  Matrix m(field, n);
  for (int i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

Matrix Matrix::from_rows(const ExtField& field, const std::vector<std::vector<u64>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(field, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      fail(ErrorCode::kDimensionMismatch, "matrix rows must be square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] >= field.size()) {
        fail(ErrorCode::kFieldMismatch, "entry outside the field");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) fail(ErrorCode::kFieldMismatch, "matrix fields differ");
  if (n_ != o.n_) fail(ErrorCode::kDimensionMismatch, "matrix sizes differ");
  const ExtField& F = *field_;
  Matrix out(F, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const u64 aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const u64 b = o.at(k, j);
        if (b == 0) continue;
        out.set(i, j, F.add(out.at(i, j), F.mul(aik, b)));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out(*field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = static_cast<std::uint32_t>(field_->add(a_[i], o.a_[i]));
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out(*field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = static_cast<std::uint32_t>(field_->sub(a_[i], o.a_[i]));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

Matrix Matrix::frobenius(int j) const {
  Matrix out = *this;
  if (field_->is_prime_field()) return out;
  for (auto& v : out.a_) {
    u64 x = v;
    for (int s = 0; s < j; ++s) x = field_->frobenius(x);
    v = static_cast<std::uint32_t>(x);
  }
  return out;
}

Matrix Matrix::scaled(u64 c) const {
  Matrix out = *this;
  for (auto& v : out.a_) v = static_cast<std::uint32_t>(field_->mul(v, c));
  return out;
}

Matrix Matrix::pow(u64 e) const {
  Matrix result = identity(*field_, n_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

u64 Matrix::det() const {
  const ExtField& F = *field_;
  std::vector<u64> m(a_.begin(), a_.end());
  u64 d = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r) {
      if (m[r * n_ + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = F.neg(d);
    }
    const u64 pv = m[c * n_ + c];
    d = F.mul(d, pv);
    const u64 inv = F.inv(pv);
    for (int r = c + 1; r < n_; ++r) {
      const u64 f = F.mul(m[r * n_ + c], inv);
      if (f == 0) continue;
      for (int j = c; j < n_; ++j) {
        m[r * n_ + j] = F.sub(m[r * n_ + j], F.mul(f, m[c * n_ + j]));
      }
    }
  }
  return d;
}

std::optional<Matrix> Matrix::inverse() const {
  const ExtField& F = *field_;
  const int n = n_;
  std::vector<u64> m(a_.begin(), a_.end());
  std::vector<u64> inv(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (m[r * n + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[c * n + j]);
        std::swap(inv[piv * n + j], inv[c * n + j]);
      }
    }
    const u64 s = F.inv(m[c * n + c]);
    for (int j = 0; j < n; ++j) {
      m[c * n + j] = F.mul(m[c * n + j], s);
      inv[c * n + j] = F.mul(inv[c * n + j], s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const u64 f = m[r * n + c];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        m[r * n + j] = F.sub(m[r * n + j], F.mul(f, m[c * n + j]));
        inv[r * n + j] = F.sub(inv[r * n + j], F.mul(f, inv[c * n + j]));
      }
    }
  }
  Matrix out(F, n);
  for (std::size_t i = 0; i < inv.size(); ++i) out.a_[i] = static_cast<std::uint32_t>(inv[i]);
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && at(i, j) != 0) return false;
      if (i == j && at(i, j) != at(0, 0)) return false;
    }
  }
  return true;
}

std::vector<u64> Matrix::charpoly() const {
  const ExtField& F = *field_;
  const int n = n_;
  std::vector<u64> h(a_.begin(), a_.end());
  auto H = [&](int i, int j) -> u64& { return h[i * n + j]; };
  // Reduce to upper Hessenberg form by similarity.
  for (int c = 0; c + 1 < n; ++c) {
    int piv = -1;
    for (int r = c + 1; r < n; ++r) {
      if (H(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
    }
    const u64 inv = F.inv(H(c + 1, c));
    for (int r = c + 2; r < n; ++r) {
      const u64 f = F.mul(H(r, c), inv);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) H(r, j) = F.sub(H(r, j), F.mul(f, H(c + 1, j)));
      for (int i = 0; i < n; ++i) H(i, c + 1) = F.add(H(i, c + 1), F.mul(f, H(i, r)));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{i<j<=k} h_{j,j-1} * p_{i-1}
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    const auto& prev = p[k - 1];
    for (int i = 0; i < k; ++i) {
      cur[i + 1] = F.add(cur[i + 1], prev[i]);
      cur[i] = F.sub(cur[i], F.mul(H(k - 1, k - 1), prev[i]));
    }
    u64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, H(i, i - 1));
      if (prod == 0) break;
      const u64 coef = F.mul(prod, H(i - 1, k - 1));
      if (coef == 0) continue;
      const auto& pi = p[i - 1];
      for (std::size_t s = 0; s < pi.size(); ++s) cur[s] = F.sub(cur[s], F.mul(coef, pi[s]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << field_->element(at(i, j)).to_string();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t Matrix::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t v : a_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::optional<std::vector<u64>> solve(const Matrix& basis, const std::vector<u64>& target) {
  const ExtField& F = basis.field();
  const int n = basis.n();
  std::vector<std::vector<u64>> aug(n, std::vector<u64>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = basis.at(i, j);
    aug[i][n] = target[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (aug[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(aug[piv], aug[c]);
    const u64 s = F.inv(aug[c][c]);
    for (int j = c; j <= n; ++j) aug[c][j] = F.mul(aug[c][j], s);
    for (int r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const u64 f = aug[r][c];
      for (int j = c; j <= n; ++j) aug[r][j] = F.sub(aug[r][j], F.mul(f, aug[c][j]));
    }
  }
  std::vector<u64> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::vector<std::vector<u64>> nullspace(const ExtField& F, std::vector<std::vector<u64>> rows,
                                        int cols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 s = F.inv(rows[rank][c]);
    for (int j = c; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const u64 f = rows[r][c];
      for (int j = c; j < cols; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = F.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Matrix> intertwiners(const Matrix& a, const Matrix& b) {
  const ExtField& F = a.field();
  const int n = a.n();
  // Unknown x_{ij} at index i*n + j.  (XA - BX)_{ij} = sum_k x_ik a_kj - b_ik x_kj.
  std::vector<std::vector<u64>> rows;
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<u64> row(static_cast<std::size_t>(n) * n, 0);
      for (int k = 0; k < n; ++k) {
        row[i * n + k] = F.add(row[i * n + k], a.at(k, j));
        row[k * n + j] = F.sub(row[k * n + j], b.at(i, k));
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(F, std::move(rows), n * n)) {
    Matrix m(F, n);
    for (int i = 0; i < n * n; ++i) m.set(i / n, i % n, v[i]);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace frobsplit
