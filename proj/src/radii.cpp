#include "tensorloc/radii.hpp"

#include <cmath>

namespace tensorloc {

namespace {

void check_row(const Tensor& t, int i) {
  if (i < 0 || i >= t.dim()) {
    throw TensorError("row index " + std::to_string(i + 1) + " out of range");
  }
}

std::int64_t diagonal_offset(const Tensor& t, int i) {
  return t.offset_of(IndexTuple(static_cast<std::size_t>(t.order()), i));
}

std::int64_t row_column_offset(const Tensor& t, int i, int j) {
  IndexTuple idx(static_cast<std::size_t>(t.order()), j);
  idx[0] = i;
  return t.offset_of(idx);
}

/// Calls fn(offset, value) for the stored tuples of row i in lexicographic order.
template <typename Fn>
void for_row(const Tensor& t, int i, Fn&& fn) {
  const std::int64_t begin = static_cast<std::int64_t>(i) * t.row_volume();
  const auto& storage = t.storage();
  for (auto it = storage.lower_bound(begin);
       it != storage.end() && it->first < begin + t.row_volume(); ++it) {
    fn(it->first, it->second);
  }
}

/// True when every trailing index (i_2..i_m) of `offset` lies in `in_set`.
bool tail_in(const Tensor& t, std::int64_t offset, const std::vector<char>& in_set) {
  std::int64_t tail = offset % t.row_volume();
  for (int k = 1; k < t.order(); ++k) {
    if (!in_set[static_cast<std::size_t>(tail % t.dim())]) return false;
    tail /= t.dim();
  }
  return true;
}

std::vector<char> membership(int dim, const std::vector<int>& members) {
  std::vector<char> in_set(static_cast<std::size_t>(dim), 0);
  for (int i : members) in_set[static_cast<std::size_t>(i)] = 1;
  return in_set;
}

SplitRadii split_all(const Tensor& t, const std::vector<int>& members) {
  const auto in_set = membership(t.dim(), members);
  SplitRadii out{std::vector<double>(static_cast<std::size_t>(t.dim()), 0.0),
                 std::vector<double>(static_cast<std::size_t>(t.dim()), 0.0)};
  for (int i = 0; i < t.dim(); ++i) {
    const std::int64_t diag = diagonal_offset(t, i);
    double inside = 0.0;
    double outside = 0.0;
    for_row(t, i, [&](std::int64_t off, Scalar v) {
      if (off == diag) return;
      (tail_in(t, off, in_set) ? inside : outside) += std::abs(v);
    });
    out.inside[static_cast<std::size_t>(i)] = inside;
    out.outside[static_cast<std::size_t>(i)] = outside;
  }
  return out;
}

}  // namespace

double row_radius(const Tensor& t, int i) {
  check_row(t, i);
  const std::int64_t diag = diagonal_offset(t, i);
  double sum = 0.0;
  for_row(t, i, [&](std::int64_t off, Scalar v) {
    if (off != diag) sum += std::abs(v);
  });
  return sum;
}

double deleted_row_radius(const Tensor& t, int i, int j) {
  check_row(t, i);
  check_row(t, j);
  if (i == j) throw TensorError("deleted row radius needs i != j");
  const std::int64_t diag = diagonal_offset(t, i);
  const std::int64_t skip = row_column_offset(t, i, j);
  double sum = 0.0;
  for_row(t, i, [&](std::int64_t off, Scalar v) {
    if (off != diag && off != skip) sum += std::abs(v);
  });
  return sum;
}

double split_radius(const Tensor& t, int i, const SubsetPartition& part,
                    SplitBlock block) {
  check_row(t, i);
  if (part.dim() != t.dim()) throw TensorError("partition dimension mismatch");
  const auto in_set = membership(t.dim(), part.members());
  const std::int64_t diag = diagonal_offset(t, i);
  double sum = 0.0;
  for_row(t, i, [&](std::int64_t off, Scalar v) {
    if (off == diag) return;
    if (tail_in(t, off, in_set) == (block == SplitBlock::inside)) sum += std::abs(v);
  });
  return sum;
}

RadiiCache::RadiiCache(const Tensor& t) : dim_(t.dim()) {
  const auto n = static_cast<std::size_t>(dim_);
  diag_.resize(n);
  diag_abs_.resize(n);
  row_.resize(n);
  deleted_.assign(n * n, 0.0);
  coupling_.assign(n * n, 0.0);
  for (int i = 0; i < dim_; ++i) {
    diag_[idx(i)] = t.diagonal(i);
    diag_abs_[idx(i)] = std::abs(diag_[idx(i)]);
    row_[idx(i)] = row_radius(t, i);
    for (int j = 0; j < dim_; ++j) {
      if (j == i) continue;
      deleted_[pair(i, j)] = deleted_row_radius(t, i, j);
      coupling_[pair(i, j)] = std::abs(t.row_column(i, j));
    }
  }
}

PartitionRadii partition_radii(const Tensor& t, const SubsetPartition& part) {
  if (part.dim() != t.dim()) throw TensorError("partition dimension mismatch");
  return {split_all(t, part.members()), split_all(t, part.complement())};
}

}  // namespace tensorloc
