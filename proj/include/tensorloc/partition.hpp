#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tensorloc {

/// A nonempty proper subset S of {0, ..., n-1} together with its complement.
class SubsetPartition {
 public:
  /// Throws TensorError when S is empty, equals the whole index set, or has
  /// an out-of-range member. Duplicates are collapsed.
  SubsetPartition(int dim, std::span<const int> members);

  /// Builds a partition from the low `dim` bits of `mask`.
  static SubsetPartition from_mask(int dim, unsigned long long mask);

  int dim() const { return dim_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& complement() const { return complement_; }
  bool contains(int i) const { return in_subset_[static_cast<std::size_t>(i)] != 0; }

  /// The same split with the roles of S and its complement exchanged.
  SubsetPartition swapped() const;

  /// "{1,2}" using 1-based labels.
  std::string to_string() const;

  friend bool operator==(const SubsetPartition& a, const SubsetPartition& b) {
    return a.dim_ == b.dim_ && a.members_ == b.members_;
  }

 private:
  int dim_;
  std::vector<int> members_;
  std::vector<int> complement_;
  std::vector<char> in_subset_;
};

/// Every nonempty proper subset of {0..dim-1}, ordered by increasing size and
/// lexicographically within a size.
std::vector<SubsetPartition> enumerate_partitions(int dim);

/// Visits partitions in the same order as enumerate_partitions without
/// materializing them. Stops and returns true as soon as `visit` does.
bool for_each_partition(int dim,
                        const std::function<bool(const SubsetPartition&)>& visit);

}  // namespace tensorloc
