#include "tensorloc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace tensorloc {

namespace {

std::string tuple_label(std::span<const int> index) {
  std::string s = "(";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(index[k] + 1);
  }
  return s + ")";
}

}  // namespace

bool is_diagonal_tuple(std::span<const int> index) {
  return std::adjacent_find(index.begin(), index.end(), std::not_equal_to<>()) ==
         index.end();
}

Tensor::Tensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2) throw TensorError("tensor order must be at least 2");
  if (dim < 1) throw TensorError("tensor dimension must be at least 1");
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  for (int k = 0; k < order; ++k) {
    if (volume_ > kMax / dim) throw TensorError("tensor too large to index");
    volume_ *= dim;
    if (k > 0) row_volume_ *= dim;
  }
}

void Tensor::validate(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw TensorError("index tuple has " + std::to_string(index.size()) +
                      " components, expected " + std::to_string(order_));
  }
  for (int v : index) {
    if (v < 0 || v >= dim_) {
      throw TensorError("index out of range in tuple " + tuple_label(index));
    }
  }
}

std::int64_t Tensor::offset_of(std::span<const int> index) const {
  validate(index);
  std::int64_t off = 0;
  for (int v : index) off = off * dim_ + v;
  return off;
}

IndexTuple Tensor::tuple_of(std::int64_t offset) const {
  IndexTuple idx(static_cast<std::size_t>(order_));
  for (int k = order_ - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(offset % dim_);
    offset /= dim_;
  }
  return idx;
}

Tensor Tensor::build(int order, int dim, std::span<const TensorEntry> entries,
                     bool symmetrize) {
  Tensor t(order, dim);
  t.symmetric_ = symmetrize;
  std::set<std::int64_t> seen;
  for (const auto& e : entries) {
    const std::int64_t off = t.offset_of(e.index);
    if (symmetrize && !std::is_sorted(e.index.begin(), e.index.end())) {
      throw TensorError("unsorted representative " + tuple_label(e.index));
    }
    if (!seen.insert(off).second) {
      throw TensorError("duplicate tuple " + tuple_label(e.index));
    }
    if (!symmetrize) {
      if (e.value != Scalar{}) t.entries_[off] = e.value;
      continue;
    }
    // Sorted representatives that are permutations of each other are equal,
    // so the duplicate check above already rules out conflicting expansions.
    IndexTuple perm = e.index;
    do {
      const std::int64_t p = t.offset_of(perm);
      if (e.value != Scalar{}) t.entries_[p] = e.value;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t;
}

Scalar Tensor::entry(std::span<const int> index) const {
  const auto it = entries_.find(offset_of(index));
  return it == entries_.end() ? Scalar{} : it->second;
}

Scalar Tensor::diagonal(int i) const {
  IndexTuple idx(static_cast<std::size_t>(order_), i);
  return entry(idx);
}

Scalar Tensor::row_column(int i, int j) const {
  IndexTuple idx(static_cast<std::size_t>(order_), j);
  idx[0] = i;
  return entry(idx);
}

bool Tensor::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second.imag() == 0.0; });
}

bool Tensor::check_symmetric(double rel_tol) const {
  for (const auto& [off, value] : entries_) {
    IndexTuple perm = tuple_of(off);
    std::sort(perm.begin(), perm.end());
    do {
      const Scalar other = entry(perm);
      const double scale = std::max(std::abs(value), std::abs(other));
      if (std::abs(value - other) > rel_tol * scale) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

Tensor Tensor::scaled(Scalar factor) const {
  Tensor out(order_, dim_);
  out.symmetric_ = symmetric_;
  for (const auto& [off, value] : entries_) {
    const Scalar v = value * factor;
    if (v != Scalar{}) out.entries_[off] = v;
  }
  return out;
}

Tensor Tensor::permuted(std::span<const int> relabel) const {
  if (static_cast<int>(relabel.size()) != dim_) {
    throw TensorError("relabeling has wrong length");
  }
  Tensor out(order_, dim_);
  out.symmetric_ = symmetric_;
  for (const auto& [off, value] : entries_) {
    IndexTuple idx = tuple_of(off);
    for (int& v : idx) v = relabel[static_cast<std::size_t>(v)];
    out.entries_[out.offset_of(idx)] = value;
  }
  return out;
}

void Tensor::set(std::span<const int> index, Scalar value) {
  const std::int64_t off = offset_of(index);
  symmetric_ = false;
  if (value == Scalar{}) {
    entries_.erase(off);
  } else {
    entries_[off] = value;
  }
}

Tensor Tensor::identity(int order, int dim) {
  std::vector<Scalar> ones(static_cast<std::size_t>(dim), Scalar{1.0});
  return diagonal_tensor(order, ones);
}

Tensor Tensor::diagonal_tensor(int order, std::span<const Scalar> diag) {
  std::vector<TensorEntry> reps;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    reps.push_back({IndexTuple(static_cast<std::size_t>(order), static_cast<int>(i)),
                    diag[i]});
  }
  return build(order, static_cast<int>(diag.size()), reps, true);
}

}  // namespace tensorloc
