#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/finfield.hpp"

namespace frobsplit {

// Dense square matrix over a field of size < 2^32, entries stored as encoded
// values.  Small dimensions only (group enumeration scale).
class Matrix {
 public:
  Matrix(const ExtField& field, int n);
  static Matrix identity(const ExtField& field, int n);
  static Matrix scalar(const ExtField& field, int n, std::uint64_t c);
  // Row-major rows of encoded values.  Throws kDimensionMismatch.
  static Matrix from_rows(const ExtField& field,
                          const std::vector<std::vector<std::uint64_t>>& rows);

  const ExtField& field() const noexcept { return *field_; }
  int n() const noexcept { return n_; }
  std::uint64_t at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, std::uint64_t v) { a_[i * n_ + j] = static_cast<std::uint32_t>(v); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return field_ == o.field_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const { return a_ < o.a_; }

  Matrix transpose() const;
  // Entrywise x -> x^(p^j).
  Matrix frobenius(int j = 1) const;
  Matrix scaled(std::uint64_t c) const;
  Matrix pow(std::uint64_t e) const;  // requires invertibility only for e = 0
  std::uint64_t det() const;
  std::optional<Matrix> inverse() const;
  bool is_identity() const;
  bool is_scalar() const;

  // Characteristic polynomial det(t - M), monic ascending, length n + 1.
  std::vector<std::uint64_t> charpoly() const;

  // Row-major entries, each as its ascending coefficient vector:
  // "[[[1],[0]],[[0],[1]]]".
  std::string to_string() const;

  std::size_t hash() const noexcept;
  const std::vector<std::uint32_t>& raw() const noexcept { return a_; }

 private:
  const ExtField* field_;
  int n_;
  std::vector<std::uint32_t> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

// Solves for the coordinates of `target` in the basis given by the columns of
// `basis`; nullopt if singular.
std::optional<std::vector<std::uint64_t>> solve(const Matrix& basis,
                                                const std::vector<std::uint64_t>& target);

// Basis of {x : A x = 0} for a rows x cols system over `field`.
std::vector<std::vector<std::uint64_t>> nullspace(const ExtField& field,
                                                  std::vector<std::vector<std::uint64_t>> rows,
                                                  int cols);

// Basis of {X : X A = B X}.
std::vector<Matrix> intertwiners(const Matrix& a, const Matrix& b);

}  // namespace frobsplit
