#pragma once

#include <vector>

#include "tensorloc/partition.hpp"
#include "tensorloc/tensor.hpp"

namespace tensorloc {

/// r_i(A): sum of |a_{i i_2...i_m}| over all tuples except the diagonal one.
double row_radius(const Tensor& t, int i);

/// r_i^j(A): row radius with the tuple (i, j, ..., j) also removed. Requires
/// i != j.
double deleted_row_radius(const Tensor& t, int i, int j);

/// Which half of row i's off-diagonal mass to sum.
enum class SplitBlock {
  /// Tuples (i_2..i_m) with every component in S.
  inside,
  /// All remaining tuples.
  outside,
};

/// r_i^{Δ^S}(A) or r_i^{\overline{Δ^S}}(A) for the subset side of `part`.
/// The diagonal tuple is excluded from whichever block it falls in.
double split_radius(const Tensor& t, int i, const SubsetPartition& part,
                    SplitBlock block);

/// Split radii of every row with respect to one index subset.
struct SplitRadii {
  std::vector<double> inside;
  std::vector<double> outside;
};

/// Precomputed radii for a tensor. Immutable once built.
class RadiiCache {
 public:
  explicit RadiiCache(const Tensor& t);

  int dim() const { return dim_; }

  /// |a_{i...i}| and a_{i...i}
  double diag_abs(int i) const { return diag_abs_[idx(i)]; }
  Scalar diag(int i) const { return diag_[idx(i)]; }

  double row(int i) const { return row_[idx(i)]; }

  /// r_i^j
  double deleted(int i, int j) const { return deleted_[pair(i, j)]; }

  /// |a_{i j ... j}|
  double coupling(int i, int j) const { return coupling_[pair(i, j)]; }

  friend bool operator==(const RadiiCache&, const RadiiCache&) = default;

 private:
  std::size_t idx(int i) const { return static_cast<std::size_t>(i); }
  std::size_t pair(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(j);
  }

  int dim_;
  std::vector<Scalar> diag_;
  std::vector<double> diag_abs_;
  std::vector<double> row_;
  std::vector<double> deleted_;
  std::vector<double> coupling_;
};

/// Radii for one partition: both orientations of the split.
struct PartitionRadii {
  /// Split against S: inside = r^{Δ^S}, outside = r^{\overline{Δ^S}}.
  SplitRadii subset;
  /// Split against the complement S̄.
  SplitRadii complement;
};

PartitionRadii partition_radii(const Tensor& t, const SubsetPartition& part);

}  // namespace tensorloc
