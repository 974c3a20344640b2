#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensorloc/dominance.hpp"
#include "tensorloc/eig_oracle.hpp"
#include "tensorloc/partition.hpp"
#include "tensorloc/regions.hpp"
#include "tensorloc/tensor.hpp"

namespace tensorloc {

/// Four decimals, never "-0.0000".
std::string fixed4(double v);

/// Row radii, the r_i^j table, and split radii for an optional subset.
std::string format_radii(const Tensor& t, const std::optional<SubsetPartition>& part);

/// One verdict line plus the full inequality table of the class.
std::string format_verdict(const Tensor& t, const ClassVerdict& v);

std::string format_certification(const CertificationReport& r);

/// Eigenpair table with region membership for each λ (relative inflation
/// `slack`). Subset regions are skipped when `part` is empty.
std::string format_eigenpairs(const Tensor& t, const std::vector<EigenPair>& pairs,
                              const std::optional<SubsetPartition>& part, double slack);

std::string format_chain_report(const ChainReport& r, const SubsetPartition& part);

}  // namespace tensorloc
