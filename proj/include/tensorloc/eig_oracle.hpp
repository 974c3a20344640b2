#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tensorloc/tensor.hpp"

namespace tensorloc {

using ComplexVector = std::vector<Scalar>;

enum class EigenKind { general, h_real };

/// A numerically converged solution of A x^{m-1} = λ x^{[m-1]}.
///
/// x is canonical: its first entry of largest modulus equals exactly 1, so
/// the max-norm is 1 and that component has zero phase.
struct EigenPair {
  Scalar lambda;
  ComplexVector x;
  double residual = 0.0;
  EigenKind kind = EigenKind::general;
};

/// (A x^{m-1})_i = Σ a_{i i_2..i_m} x_{i_2} ... x_{i_m}, summed over stored
/// tuples in lexicographic order.
ComplexVector multilinear_apply(const Tensor& t, std::span<const Scalar> x);

/// Componentwise k-th power.
ComplexVector power_vector(std::span<const Scalar> x, int k);

/// Jacobian of x -> A x^{m-1}, row-major n x n. Every slot position is
/// differentiated separately so the result is valid for non-symmetric tensors.
std::vector<Scalar> apply_jacobian(const Tensor& t, std::span<const Scalar> x);

/// max_i |(A x^{m-1})_i - λ x_i^{m-1}|
double eigen_residual(const Tensor& t, Scalar lambda, std::span<const Scalar> x);

/// Rescales x so its first largest-modulus component is exactly 1.
ComplexVector canonicalize(std::span<const Scalar> x);

struct NewtonOptions {
  int num_starts = 40;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iter = 100;
  /// Eigenvalues closer than this are merged.
  double dedup_tol = 1e-6;
};

/// Newton's method on {A x^{m-1} - λ x^{[m-1]} = 0, u^H x = 1} from random
/// complex starts. Start k draws from seed + k; u is fixed by the seed.
/// Converged pairs are canonicalized, deduplicated by λ, and sorted by
/// (Re λ, Im λ). Best effort: there is no completeness guarantee.
std::vector<EigenPair> newton_eigenpairs(const Tensor& t, const NewtonOptions& options = {});

enum class Extreme { largest, smallest };

struct PowerOptions {
  /// Shift added to the identity tensor; negative selects the automatic
  /// shift 1 + Σ r_i + max |a_{i..i}|.
  double shift = -1.0;
  double tol = 1e-12;
  int max_iter = 5000;
  int num_starts = 8;
  std::uint64_t seed = 0;
};

/// Shifted power iteration for the extreme H-eigenvalue of an even-order real
/// symmetric tensor. Iterates x <- ((±A + αI) x^{m-1})^{[1/(m-1)]} normalized
/// on the unit m-norm sphere and keeps the best pair over all starts.
/// Throws TensorError for odd order, complex entries, or an asymmetric tensor.
EigenPair shifted_power_extreme(const Tensor& t, Extreme want, const PowerOptions& options = {});

/// True when λ is real and x is real to within `tol`.
bool is_h_eigenpair(const EigenPair& p, double tol = 1e-8);

}  // namespace tensorloc
