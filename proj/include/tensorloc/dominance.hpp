#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorloc/partition.hpp"
#include "tensorloc/tensor.hpp"

namespace tensorloc {

/// The diagonal-dominance classes, weakest-hypothesis last. A trailing 0
/// marks the non-strict (>=) variant; the strict-DD class is SDD.
enum class DominanceClass { DD, SDD, QDSDD0, QDSDD, S_QDSDD0, S_QDSDD, S_SDD0, S_SDD };

std::string_view to_string(DominanceClass c);
bool is_strict(DominanceClass c);
bool needs_partition(DominanceClass c);

/// One dominance inequality with both sides as evaluated.
///
/// `inequality` selects which displayed condition this is for pair classes:
/// 0 is the primary form for (i, j), 1 is the mirrored form. For DD/SDD
/// only `i` is meaningful and `j` is -1.
struct InequalitySides {
  int i = -1;
  int j = -1;
  int inequality = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// The failing inequality of a verdict.
using Witness = InequalitySides;

struct ClassVerdict {
  DominanceClass cls;
  bool holds = false;
  std::optional<Witness> witness;
  std::optional<SubsetPartition> partition;
};

/// |a_{i..i}| >= (>) r_i for every i. Witness: first failing row.
ClassVerdict is_diagonally_dominant(const Tensor& t, bool strict);

/// (|a_i| - r_i^j) |a_j| >= (>) r_j |a_{ij..j}| for every ordered i != j.
/// Witness: first failing ordered pair in lexicographic order.
ClassVerdict is_quasi_doubly_dd(const Tensor& t, bool strict);

/// For each i ∈ S, j ∈ S̄: the quasi-doubly inequality for (i, j) and its
/// mirror (|a_j| - r_j^i) |a_i| >= (>) r_i |a_{ji..i}|.
ClassVerdict is_s_qdsdd(const Tensor& t, const SubsetPartition& part, bool strict);

/// For each i ∈ S, j ∈ S̄:
///   |a_i| (|a_j| - r_j^{out S})  >= (>) r_i r_j^{in S}
///   |a_j| (|a_i| - r_i^{out S̄}) >= (>) r_j r_i^{in S̄}
ClassVerdict is_s_sdd(const Tensor& t, const SubsetPartition& part, bool strict);

/// Dispatches on `cls`. `part` is required for the subset classes.
ClassVerdict evaluate_class(const Tensor& t, DominanceClass cls,
                            const SubsetPartition* part = nullptr);

/// Every inequality the class definition requires, in evaluation order.
std::vector<InequalitySides> inequality_table(const Tensor& t, DominanceClass cls,
                                              const SubsetPartition* part = nullptr);

/// Re-derives the witness inequality from the tensor and returns true when it
/// is violated with the recorded side values (to 1e-12 relative).
bool replay_witness(const Tensor& t, const ClassVerdict& verdict);

inline constexpr int kDefaultSearchCap = 20;

/// First nonempty proper subset (by size, then lexicographic) for which the
/// subset class holds. Throws TensorError for a non-subset class or when the
/// dimension is outside [2, cap].
std::optional<SubsetPartition> find_certifying_subset(const Tensor& t, DominanceClass cls,
                                                      int cap = kDefaultSearchCap);

enum class DiagonalSign { all_positive, all_nonnegative, mixed };
enum class Definiteness { positive_definite, positive_semidefinite, inconclusive };

std::string_view to_string(DiagonalSign s);
std::string_view to_string(Definiteness d);

struct CertifyOptions {
  /// Candidate subsets checked in order. Ignored when `search` is set.
  std::vector<SubsetPartition> partitions;
  bool search = false;
  int search_cap = kDefaultSearchCap;
};

struct CertificationReport {
  bool symmetric = false;
  bool even_order = false;
  bool real = false;
  DiagonalSign diagonal_sign = DiagonalSign::mixed;
  std::vector<ClassVerdict> verdicts;
  Definiteness conclusion = Definiteness::inconclusive;
  std::optional<DominanceClass> certifying_class;
  std::optional<SubsetPartition> certifying_partition;
  std::vector<std::string> reasons;
};

/// Sufficient-condition test for positive (semi-)definiteness of an
/// even-order real symmetric tensor. Never claims indefiniteness.
///
/// The strict ladder SDD -> QDSDD -> S-QDSDD -> S-SDD is walked first and
/// stops at the first class that holds; if none does, the non-strict ladder
/// follows. A strict hit with a positive diagonal gives positive_definite, any
/// hit with a nonnegative diagonal gives positive_semidefinite.
CertificationReport certify_definiteness(const Tensor& t, const CertifyOptions& options);

/// The three fractions ((a-(b+c))/d, (a-b)/(c+d), a/(b+c+d)). They are
/// non-decreasing when a/(b+c+d) <= 1 and non-increasing when >= 1.
/// Requires a, b, c >= 0 and d > 0.
std::array<double, 3> lemma_fraction_bounds(double a, double b, double c, double d);

}  // namespace tensorloc
