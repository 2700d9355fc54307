#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bres/polynomial.hpp"

namespace bres {

/// Element of the free module R^rank, stored sparsely. Components are
/// 0-based here; exports convert to 1-based indices.
class ModuleVector {
 public:
  ModuleVector(RingPtr ring, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::map<std::size_t, Polynomial>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // Zero polynomial when the component is absent.
  Polynomial at(std::size_t comp) const;
  void set(std::size_t comp, Polynomial value);
  void add_to(std::size_t comp, const Polynomial& value);

  ModuleVector operator-() const;
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  ModuleVector scaled(const Polynomial& p) const;
  ModuleVector scaled(const Coeff& c) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  // Sum of entry_i * row_i.
  Polynomial dot(std::span<const Polynomial> row) const;

 private:
  void check(const ModuleVector& other) const;

  RingPtr ring_;
  std::size_t rank_;
  std::map<std::size_t, Polynomial> entries_;
};

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  Polynomial value;
};

/// Sparse rows x cols matrix stored column by column; column j is the image
/// of the j-th basis vector of the source module.
class SparseMatrix {
 public:
  SparseMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static SparseMatrix from_columns(RingPtr ring, std::size_t rows, std::vector<ModuleVector> columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<ModuleVector>& columns() const { return columns_; }
  const ModuleVector& column(std::size_t j) const { return columns_.at(j); }

  Polynomial at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, Polynomial value);

  // Nonzero entries in column-major order.
  std::vector<MatrixEntry> entries() const;

  ModuleVector apply(const ModuleVector& v) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  bool is_zero() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::vector<ModuleVector> columns_;
};

}  // namespace bres
