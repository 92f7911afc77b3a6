#pragma once

#include "g2voa/rational.hpp"

#include <map>
#include <vector>

namespace g2voa::linalg {

using sparse_vec = std::map<int, rational>;

// incremental row echelon form; rows are kept with leading coefficient one
class echelon {
 public:
  explicit echelon(int ncols = 0) : ncols_(ncols) {}

  // true when v was independent of the rows so far
  bool insert(sparse_vec v);
  sparse_vec reduce(sparse_vec v) const;
  bool contains(const sparse_vec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::vector<int> pivots() const;
  std::vector<sparse_vec> rref() const;  // fully reduced, ordered by pivot

 private:
  int ncols_;
  std::map<int, sparse_vec> rows_;
};

// kernel of the matrix whose j-th column is cols[j], j < ncols; reduced echelon basis
std::vector<sparse_vec> nullspace(const std::vector<sparse_vec>& cols, int ncols);

}  // namespace g2voa::linalg
