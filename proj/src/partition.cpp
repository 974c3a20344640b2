#include "tensorloc/partition.hpp"

#include <algorithm>

#include "tensorloc/tensor.hpp"

namespace tensorloc {

SubsetPartition::SubsetPartition(int dim, std::span<const int> members)
    : dim_(dim), in_subset_(static_cast<std::size_t>(std::max(dim, 0)), 0) {
  if (dim < 2) throw TensorError("a subset partition needs dimension >= 2");
  for (int i : members) {
    if (i < 0 || i >= dim) {
      throw TensorError("subset member " + std::to_string(i + 1) +
                        " out of range 1.." + std::to_string(dim));
    }
    in_subset_[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < dim; ++i) {
    (in_subset_[static_cast<std::size_t>(i)] ? members_ : complement_).push_back(i);
  }
  if (members_.empty()) throw TensorError("subset must be nonempty");
  if (complement_.empty()) throw TensorError("subset must be a proper subset");
}

SubsetPartition SubsetPartition::from_mask(int dim, unsigned long long mask) {
  std::vector<int> members;
  for (int i = 0; i < dim && i < 64; ++i) {
    if (mask >> i & 1ULL) members.push_back(i);
  }
  return SubsetPartition(dim, members);
}

SubsetPartition SubsetPartition::swapped() const {
  return SubsetPartition(dim_, complement_);
}

std::string SubsetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members_[k] + 1);
  }
  return s + "}";
}

bool for_each_partition(int dim,
                        const std::function<bool(const SubsetPartition&)>& visit) {
  for (int size = 1; size < dim; ++size) {
    // Lexicographic combinations of `size` indices.
    std::vector<int> comb(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) comb[static_cast<std::size_t>(k)] = k;
    while (true) {
      if (visit(SubsetPartition(dim, comb))) return true;
      int k = size - 1;
      while (k >= 0 && comb[static_cast<std::size_t>(k)] == dim - size + k) --k;
      if (k < 0) break;
      ++comb[static_cast<std::size_t>(k)];
      for (int l = k + 1; l < size; ++l) {
        comb[static_cast<std::size_t>(l)] = comb[static_cast<std::size_t>(l - 1)] + 1;
      }
    }
  }
  return false;
}

std::vector<SubsetPartition> enumerate_partitions(int dim) {
  std::vector<SubsetPartition> out;
  for_each_partition(dim, [&](const SubsetPartition& p) {
    out.push_back(p);
    return false;
  });
  return out;
}

}  // namespace tensorloc
