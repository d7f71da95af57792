#include "balrig/matrix.hpp"

#include <random>
#include <sstream>
#include <utility>

#include "balrig/errors.hpp"
#include "rng.hpp"

namespace balrig {

GenericMatrix::GenericMatrix(std::uint64_t p, std::vector<std::string> rows,
                             std::vector<std::string> cols)
    : prime(p), row_labels(std::move(rows)), col_labels(std::move(cols)) {
  entries.assign(row_labels.size() * col_labels.size(), 0);
}

std::size_t echelon_rank(const PrimeField& field, std::vector<Residue>& data,
                         std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && data[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(data[piv * cols + j], data[r * cols + j]);
    }
    const Residue inv = field.inv(data[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) data[r * cols + j] = field.mul(data[r * cols + j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Residue f = data[i * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        data[i * cols + j] = field.sub(data[i * cols + j], field.mul(f, data[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank(const GenericMatrix& m) {
  PrimeField field(m.prime);
  std::vector<Residue> data = m.entries;
  return echelon_rank(field, data, m.rows(), m.cols());
}

std::vector<std::vector<Residue>> left_kernel(const GenericMatrix& m) {
  PrimeField field(m.prime);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t width = cols + rows;
  // [M | I]; a row whose M-part vanishes carries a dependency in its I-part.
  std::vector<Residue> data(rows * width, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) data[i * width + j] = m.at(i, j);
    data[i * width + cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && data[piv * width + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < width; ++j) std::swap(data[piv * width + j], data[r * width + j]);
    }
    const Residue inv = field.inv(data[r * width + c]);
    for (std::size_t j = 0; j < width; ++j) data[r * width + j] = field.mul(data[r * width + j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Residue f = data[i * width + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        data[i * width + j] = field.sub(data[i * width + j], field.mul(f, data[r * width + j]));
      }
    }
    ++r;
  }
  std::vector<std::vector<Residue>> basis;
  for (std::size_t i = r; i < rows; ++i) {
    basis.emplace_back(data.begin() + static_cast<std::ptrdiff_t>(i * width + cols),
                       data.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
  }
  return basis;
}

std::vector<std::size_t> greedy_independent_rows(const GenericMatrix& m) {
  PrimeField field(m.prime);
  IncrementalBasis basis(field, m.cols());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (basis.try_insert(m.row(i))) kept.push_back(i);
  }
  return kept;
}

std::string dump(const GenericMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << m.row_labels[i] << ':';
    for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m.at(i, j);
    os << '\n';
  }
  return os.str();
}

IncrementalBasis::IncrementalBasis(const PrimeField& field, std::size_t dim)
    : field_(&field), dim_(dim) {}

void IncrementalBasis::reduce(std::vector<Residue>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) {
      if (row[j] != 0) v[j] = field_->sub(v[j], field_->mul(f, row[j]));
    }
  }
}

bool IncrementalBasis::try_insert(std::span<const Residue> v) {
  if (v.size() != dim_) throw InvalidInput("vector length does not match basis dimension");
  std::vector<Residue> w(v.begin(), v.end());
  reduce(w);
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  const Residue inv = field_->inv(w[p]);
  for (std::size_t j = p; j < dim_; ++j) w[j] = field_->mul(w[j], inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool IncrementalBasis::in_span(std::span<const Residue> v) const {
  if (v.size() != dim_) throw InvalidInput("vector length does not match basis dimension");
  std::vector<Residue> w(v.begin(), v.end());
  reduce(w);
  for (Residue x : w) {
    if (x != 0) return false;
  }
  return true;
}

Theta::Theta(std::uint64_t prime, std::uint64_t seed, std::vector<std::vector<Residue>> blocks,
             std::vector<std::size_t> sizes)
    : prime_(prime), seed_(seed), blocks_(std::move(blocks)), sizes_(std::move(sizes)) {
  if (blocks_.size() != sizes_.size()) throw InvalidInput("theta block count mismatch");
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    if (blocks_[c].size() != sizes_[c] * sizes_[c]) throw InvalidInput("theta block is not square");
  }
}

Theta sample_theta(const PrimeField& field, std::uint64_t seed,
                   std::span<const std::size_t> block_sizes) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Residue>> blocks;
  for (std::size_t s : block_sizes) {
    std::vector<Residue> block(s * s);
    for (;;) {
      for (auto& x : block) x = detail::uniform_below(rng, field.modulus());
      std::vector<Residue> scratch = block;
      if (echelon_rank(field, scratch, s, s) == s) break;
    }
    blocks.push_back(std::move(block));
  }
  return Theta(field.modulus(), seed, std::move(blocks),
               std::vector<std::size_t>(block_sizes.begin(), block_sizes.end()));
}

}  // namespace balrig
