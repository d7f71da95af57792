#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "balrig/field.hpp"

namespace balrig {

/// Dense matrix over F_p whose rows and columns carry combinatorial labels
/// (edges, facets, vertex-slot pairs). `seed` records the Theta draw the
/// entries were built from.
struct GenericMatrix {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<Residue> entries;  // row-major

  GenericMatrix() = default;
  GenericMatrix(std::uint64_t p, std::vector<std::string> rows,
                std::vector<std::string> cols);

  std::size_t rows() const { return row_labels.size(); }
  std::size_t cols() const { return col_labels.size(); }
  Residue& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
  Residue at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {entries.data() + r * cols(), cols()};
  }
};

/// Rank by in-place Gaussian elimination on a copy.
std::size_t rank(const GenericMatrix& m);

/// Basis of the space of row dependencies; each vector has one coordinate per
/// row. Its size is rows() - rank(m).
std::vector<std::vector<Residue>> left_kernel(const GenericMatrix& m);

/// Scans rows top to bottom and keeps a row iff it is independent of the rows
/// kept so far. Returns the kept row indices (exactly rank(m) of them).
std::vector<std::size_t> greedy_independent_rows(const GenericMatrix& m);

/// `label: r0 r1 ...` per row, residues in decimal.
std::string dump(const GenericMatrix& m);

/// Row-echelon basis that grows one vector at a time. Each stored row is
/// normalized to a leading 1 and reduced against earlier pivots, so a single
/// forward pass reduces any query vector.
class IncrementalBasis {
 public:
  IncrementalBasis(const PrimeField& field, std::size_t dim);

  /// Inserts `v` if it is not in the current span; returns whether it was.
  bool try_insert(std::span<const Residue> v);
  bool in_span(std::span<const Residue> v) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<Residue>& v) const;

  const PrimeField* field_;
  std::size_t dim_;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Block-diagonal change of coordinates: one invertible square block per
/// color (side). Entry (slot, vertex) of block c is theta_{slot, vertex}.
class Theta {
 public:
  Theta() = default;
  Theta(std::uint64_t prime, std::uint64_t seed,
        std::vector<std::vector<Residue>> blocks, std::vector<std::size_t> sizes);

  std::size_t num_blocks() const { return sizes_.size(); }
  std::size_t block_size(std::size_t c) const { return sizes_[c]; }
  Residue at(std::size_t c, std::size_t slot, std::size_t vertex) const {
    return blocks_[c][slot * sizes_[c] + vertex];
  }
  std::uint64_t prime() const { return prime_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t prime_ = kDefaultPrime;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<Residue>> blocks_;
  std::vector<std::size_t> sizes_;
};

/// Uniform random invertible blocks of the given sizes; singular draws are
/// resampled. Deterministic in (prime, seed, block_sizes).
Theta sample_theta(const PrimeField& field, std::uint64_t seed,
                   std::span<const std::size_t> block_sizes);

/// Rank of a row-major rows x cols array (destroys `data`).
std::size_t echelon_rank(const PrimeField& field, std::vector<Residue>& data,
                         std::size_t rows, std::size_t cols);

}  // namespace balrig
