#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorloc/partition.hpp"
#include "tensorloc/radii.hpp"
#include "tensorloc/tensor.hpp"

namespace tensorloc {

enum class RegionKind { gamma, brauer, s_brauer, omega_s };

std::string_view to_string(RegionKind kind);
std::optional<RegionKind> parse_region_kind(std::string_view name);

/// Whether `kind` is defined relative to an index subset.
constexpr bool needs_partition(RegionKind kind) {
  return kind == RegionKind::s_brauer || kind == RegionKind::omega_s;
}

struct RegionSpec {
  RegionKind kind;
  std::optional<SubsetPartition> partition;

  /// Throws TensorError unless the partition is present exactly when the
  /// kind needs one.
  static RegionSpec make(RegionKind kind, std::optional<SubsetPartition> partition = {});
};

/// Axis-aligned rectangle in the complex plane.
struct Window {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  friend bool operator==(const Window&, const Window&) = default;
};

struct Resolution {
  int cols = 0;
  int rows = 0;
};

/// Membership predicates for the four localization sets of one tensor.
///
/// Every region is closed. Product inequalities are evaluated as written, so
/// a negative left factor simply makes the point a member. `slack` inflates
/// each right-hand side to rhs + slack * (1 + |rhs|); zero means exact.
class RegionEvaluator {
 public:
  explicit RegionEvaluator(const Tensor& t);
  RegionEvaluator(const Tensor& t, const SubsetPartition& part);

  int dim() const { return radii_.dim(); }
  const RadiiCache& radii() const { return radii_; }
  const std::optional<SubsetPartition>& partition() const { return partition_; }

  /// z ∈ Γ(A): some disk |z - a_{i..i}| <= r_i contains z.
  bool gamma(Scalar z, double slack = 0.0) const;

  /// z ∈ K(A): some ordered pair i != j with
  /// (|z - a_i| - r_i^j) |z - a_j| <= |a_{ij..j}| r_j.
  bool brauer(Scalar z, double slack = 0.0) const;

  /// z ∈ K^S(A): the Brauer pair test restricted to pairs that straddle the
  /// partition, in both orientations.
  bool s_brauer(Scalar z, double slack = 0.0) const;

  /// z ∈ Ω^S(A): for i ∈ S, j ∈ S̄
  ///   |z - a_i| (|z - a_j| - r_j^{out S}) <= r_i r_j^{in S},
  /// and the same with S and S̄ exchanged.
  bool omega_s(Scalar z, double slack = 0.0) const;

  bool contains(RegionKind kind, Scalar z, double slack = 0.0) const;

 private:
  bool brauer_pair(int i, int j, Scalar z, double slack) const;
  const SubsetPartition& require_partition() const;
  void require_pairs() const;

  RadiiCache radii_;
  std::optional<SubsetPartition> partition_;
  std::optional<PartitionRadii> split_;
};

bool gamma_contains(const Tensor& t, Scalar z);
bool brauer_contains(const Tensor& t, Scalar z);
bool s_brauer_contains(const Tensor& t, const SubsetPartition& part, Scalar z);
bool omega_s_contains(const Tensor& t, const SubsetPartition& part, Scalar z);

/// Smallest rectangle holding every Geršgorin disk, padded on each side by
/// margin_factor times the larger side. A zero-size box is padded by
/// max(1, margin_factor) instead.
Window gershgorin_bounds(const Tensor& t);
Window default_window(const Tensor& t, double margin_factor = 0.1);

/// Boolean membership grid. Row 0 is the top (largest imaginary part); cell
/// (r, c) samples the point at the cell center.
struct Disk {
  Scalar center;
  double radius;
};

struct GridRaster {
  Window window;
  Resolution resolution;
  RegionSpec region;
  std::vector<char> cells;
  /// The Geršgorin disks of the tensor; filled for gamma rasters only.
  std::vector<Disk> disks;

  bool at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * static_cast<std::size_t>(resolution.cols) +
                 static_cast<std::size_t>(col)] != 0;
  }
  Scalar center(int row, int col) const;
  std::size_t count() const;
};

/// Throws TensorError on a non-positive resolution, or on a window with zero
/// width (height) when there is more than one column (row).
GridRaster rasterize(const Tensor& t, const RegionSpec& spec, const Window& window,
                     Resolution resolution);

enum class ChainLink { omega_in_s_brauer, s_brauer_in_brauer, brauer_in_gamma };

std::string_view to_string(ChainLink link);

struct ChainViolation {
  Scalar z;
  ChainLink link;
};

struct ChainReport {
  std::size_t points_checked = 0;
  std::vector<ChainViolation> violations;
};

/// Samples points uniformly from default_window plus rings just inside and
/// just outside every Geršgorin circle, and reports each point that breaks
/// Ω^S ⊆ K^S ⊆ K ⊆ Γ.
ChainReport verify_inclusion_chain(const Tensor& t, const SubsetPartition& part,
                                   std::size_t samples, std::uint64_t seed);

}  // namespace tensorloc
