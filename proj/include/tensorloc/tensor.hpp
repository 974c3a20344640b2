#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tensorloc {

using Scalar = std::complex<double>;

/// Index tuple (i_1, ..., i_m). 0-based inside the library; files and reports
/// use 1-based indices and convert at the parser/printer boundary.
using IndexTuple = std::vector<int>;

class TensorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TensorEntry {
  IndexTuple index;
  Scalar value;
};

/// Order-m, dimension-n hypermatrix with sparse storage.
///
/// Nonzero entries are kept in a map keyed by the row-major linear offset of
/// the tuple, so iterating the map visits tuples in lexicographic order. Every
/// summation in the library walks entries in that order, which makes results
/// identical to a dense odometer sweep that adds the absent zeros.
class Tensor {
 public:
  Tensor(int order, int dim);

  /// Builds a tensor from a list of entries.
  ///
  /// With `symmetrize` set, each entry is a representative whose index tuple
  /// must be sorted non-decreasing; every permutation of it receives the
  /// value. Without it, only the literal tuples are set. Out-of-range indices,
  /// duplicate tuples, and unsorted representatives throw TensorError.
  static Tensor build(int order, int dim, std::span<const TensorEntry> entries,
                      bool symmetrize);

  int order() const { return order_; }
  int dim() const { return dim_; }
  bool symmetric_flag() const { return symmetric_; }

  /// Stored value or exactly zero. Throws TensorError on a bad tuple.
  Scalar entry(std::span<const int> index) const;

  /// a_{i...i}
  Scalar diagonal(int i) const;

  /// a_{i j ... j}
  Scalar row_column(int i, int j) const;

  /// Number of stored (nonzero) tuples.
  std::size_t nnz() const { return entries_.size(); }

  /// Total number of tuples, n^m.
  std::int64_t volume() const { return volume_; }

  /// Tuples per row, n^(m-1).
  std::int64_t row_volume() const { return row_volume_; }

  const std::map<std::int64_t, Scalar>& storage() const { return entries_; }

  std::int64_t offset_of(std::span<const int> index) const;
  IndexTuple tuple_of(std::int64_t offset) const;

  /// Returns true when every entry has zero imaginary part.
  bool is_real() const;

  /// Checks a_{idx} == a_{pi(idx)} for every stored tuple and permutation,
  /// within `rel_tol` relative to the larger modulus.
  bool check_symmetric(double rel_tol) const;

  /// Entrywise scaling by a complex factor.
  Tensor scaled(Scalar factor) const;

  /// Relabels indices: the entry at (i_1..i_m) moves to (p[i_1]..p[i_m]).
  Tensor permuted(std::span<const int> relabel) const;

  /// Directly sets an entry (no symmetric expansion). Zero erases.
  void set(std::span<const int> index, Scalar value);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ &&
           a.symmetric_ == b.symmetric_ && a.entries_ == b.entries_;
  }

  static Tensor identity(int order, int dim);
  static Tensor diagonal_tensor(int order, std::span<const Scalar> diag);

 private:
  void validate(std::span<const int> index) const;

  int order_;
  int dim_;
  bool symmetric_ = false;
  std::int64_t volume_ = 1;
  std::int64_t row_volume_ = 1;
  std::map<std::int64_t, Scalar> entries_;
};

/// δ_{i_1...i_m}: true when all components coincide.
bool is_diagonal_tuple(std::span<const int> index);

}  // namespace tensorloc
