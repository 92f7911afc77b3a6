#include "g2voa/linalg.hpp"

#include <algorithm>
#include <set>

namespace g2voa::linalg {

namespace {
void sub_scaled(sparse_vec& v, const rational& c, const sparse_vec& row) {
  for (auto& [k, x] : row) {
    auto& slot = v[k];
    slot -= c * x;
    if (slot == 0) v.erase(k);
  }
}
}  // namespace

sparse_vec echelon::reduce(sparse_vec v) const {
  // eliminate every pivot entry, smallest first; rows only touch columns >= their pivot
  auto it = v.begin();
  while (it != v.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    int key = it->first;
    rational c = it->second;
    sub_scaled(v, c, r->second);
    it = v.upper_bound(key);
  }
  return v;
}

bool echelon::insert(sparse_vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  rational lead = v.begin()->second;
  for (auto& [k, x] : v) x /= lead;
  int p = v.begin()->first;
  rows_.emplace(p, std::move(v));
  return true;
}

std::vector<int> echelon::pivots() const {
  std::vector<int> out;
  for (auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<sparse_vec> echelon::rref() const {
  std::vector<sparse_vec> rows;
  for (auto& [p, r] : rows_) rows.push_back(r);
  // back substitution: clear entries above each pivot
  for (std::size_t i = rows.size(); i-- > 0;) {
    int p = rows[i].begin()->first;
    for (std::size_t j = 0; j < i; ++j) {
      auto it = rows[j].find(p);
      if (it == rows[j].end()) continue;
      rational c = it->second;
      sub_scaled(rows[j], c, rows[i]);
    }
  }
  return rows;
}

std::vector<sparse_vec> nullspace(const std::vector<sparse_vec>& cols, int ncols) {
  // transpose into rows, then Gauss-Jordan
  std::map<int, sparse_vec> by_row;
  for (int j = 0; j < ncols; ++j)
    for (auto& [i, x] : cols[j])
      if (x != 0) by_row[i][j] = x;
  echelon e(ncols);
  for (auto& [i, r] : by_row) e.insert(r);
  auto rows = e.rref();
  std::set<int> pivots;
  for (auto& r : rows) pivots.insert(r.begin()->first);
  echelon ker(ncols);
  for (int f = 0; f < ncols; ++f) {
    if (pivots.count(f)) continue;
    sparse_vec x;
    x[f] = 1;
    for (auto& r : rows) {
      auto it = r.find(f);
      if (it != r.end()) x[r.begin()->first] = -it->second;
    }
    ker.insert(std::move(x));
  }
  return ker.rref();
}

}  // namespace g2voa::linalg
