#include "bres/module.hpp"

#include <string>

#include "bres/errors.hpp"

namespace bres {

ModuleVector::ModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

void ModuleVector::check(const ModuleVector& other) const {
  if (rank_ != other.rank_) {
    throw ArityError("module rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
  }
}

Polynomial ModuleVector::at(std::size_t comp) const {
  if (comp >= rank_) throw ArityError("component out of range");
  auto it = entries_.find(comp);
  return it == entries_.end() ? Polynomial(ring_) : it->second;
}

void ModuleVector::set(std::size_t comp, Polynomial value) {
  if (comp >= rank_) throw ArityError("component " + std::to_string(comp) + " out of range");
  if (value.is_zero()) {
    entries_.erase(comp);
  } else {
    entries_.insert_or_assign(comp, std::move(value));
  }
}

void ModuleVector::add_to(std::size_t comp, const Polynomial& value) {
  if (comp >= rank_) throw ArityError("component " + std::to_string(comp) + " out of range");
  auto it = entries_.find(comp);
  if (it == entries_.end()) {
    if (!value.is_zero()) entries_.emplace(comp, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector out = *this;
  for (auto& [c, p] : out.entries_) p = -p;
  return out;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  check(other);
  for (const auto& [c, p] : other.entries_) add_to(c, p);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  check(other);
  for (const auto& [c, p] : other.entries_) add_to(c, -p);
  return *this;
}

ModuleVector ModuleVector::scaled(const Polynomial& p) const {
  ModuleVector out(ring_, rank_);
  for (const auto& [c, q] : entries_) out.set(c, q * p);
  return out;
}

ModuleVector ModuleVector::scaled(const Coeff& k) const {
  ModuleVector out(ring_, rank_);
  if (sgn(k) == 0) return out;
  for (const auto& [c, q] : entries_) out.set(c, q.scaled(k));
  return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.rank_ != b.rank_ || a.entries_.size() != b.entries_.size()) return false;
  auto it = b.entries_.begin();
  for (const auto& [c, p] : a.entries_) {
    if (it->first != c || !(it->second == p)) return false;
    ++it;
  }
  return true;
}

Polynomial ModuleVector::dot(std::span<const Polynomial> row) const {
  if (row.size() != rank_) throw ArityError("dot product with a row of the wrong length");
  Polynomial sum(ring_);
  for (const auto& [c, p] : entries_) sum += p * row[c];
  return sum;
}

SparseMatrix::SparseMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), columns_(cols, ModuleVector(ring_, rows)) {}

SparseMatrix SparseMatrix::from_columns(RingPtr ring, std::size_t rows, std::vector<ModuleVector> columns) {
  SparseMatrix m(std::move(ring), rows, 0);
  for (auto& c : columns) {
    if (c.rank() != rows) throw ArityError("column rank does not match matrix rows");
  }
  m.columns_ = std::move(columns);
  return m;
}

Polynomial SparseMatrix::at(std::size_t row, std::size_t col) const { return columns_.at(col).at(row); }

void SparseMatrix::set(std::size_t row, std::size_t col, Polynomial value) {
  columns_.at(col).set(row, std::move(value));
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, p] : columns_[j].entries()) out.push_back(MatrixEntry{i, j, p});
  }
  return out;
}

ModuleVector SparseMatrix::apply(const ModuleVector& v) const {
  if (v.rank() != cols()) throw ArityError("matrix-vector dimension mismatch");
  ModuleVector out(ring_, rows_);
  for (const auto& [j, p] : v.entries()) out += columns_[j].scaled(p);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw ArityError("matrix product dimension mismatch");
  SparseMatrix out(a.ring_, a.rows_, 0);
  out.columns_.reserve(b.cols());
  for (const auto& col : b.columns_) out.columns_.push_back(a.apply(col));
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace bres
