#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "voakit/rational.hpp"

namespace voakit {

// Sparse row over integer column ids, ascending, no zero entries.
using SparseRow = std::vector<std::pair<long, Q>>;

void row_axpy(SparseRow& r, const Q& c, const SparseRow& x);
Q row_coeff(const SparseRow& r, long col);

// Incremental reduced row echelon form. The pivot of a row is its largest
// column id; every pivot column is zero in all other rows.
class Echelon {
 public:
  // Returns true when the rank grew.
  bool insert(SparseRow r);
  SparseRow reduce(const SparseRow& r) const;
  bool contains(const SparseRow& r) const { return reduce(r).empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(long col) const { return pivot_of_.count(col) != 0; }
  const SparseRow& row_for_pivot(long col) const { return rows_[pivot_of_.at(col)]; }
  // Rows sorted by pivot column, ascending.
  std::vector<const SparseRow*> sorted_rows() const;
  std::vector<long> pivots() const;

 private:
  std::vector<SparseRow> rows_;
  std::unordered_map<long, std::size_t> pivot_of_;
};

// Null space of the map sending basis vector i to images[i]; each kernel vector
// is returned as coefficients over the input indices.
std::vector<std::vector<Q>> kernel_of_images(const std::vector<SparseRow>& images);

}  // namespace voakit
