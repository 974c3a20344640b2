#include "tensorloc/dominance.hpp"

#include <cmath>

#include "tensorloc/radii.hpp"

namespace tensorloc {

namespace {

bool satisfied(double lhs, double rhs, bool strict) {
  return strict ? lhs > rhs : lhs >= rhs;
}

void require_pairs(const Tensor& t) {
  if (t.dim() < 2) throw TensorError("pair dominance classes need dimension >= 2");
}

void require_matching(const Tensor& t, const SubsetPartition& part) {
  if (part.dim() != t.dim()) throw TensorError("partition dimension mismatch");
}

ClassVerdict holds(DominanceClass cls, std::optional<SubsetPartition> part = {}) {
  return {cls, true, std::nullopt, std::move(part)};
}

ClassVerdict fails(DominanceClass cls, Witness w, std::optional<SubsetPartition> part = {}) {
  return {cls, false, w, std::move(part)};
}

/// Both sides of the quasi-doubly inequality for the ordered pair (i, j).
std::pair<double, double> quasi_doubly_sides(const RadiiCache& r, int i, int j) {
  return {(r.diag_abs(i) - r.deleted(i, j)) * r.diag_abs(j), r.row(j) * r.coupling(i, j)};
}

/// Both sides of the two S-SDD inequalities for i ∈ S, j ∈ S̄.
std::pair<double, double> s_sdd_sides(const RadiiCache& r, const PartitionRadii& split,
                                      int i, int j, int which) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  if (which == 0) {
    return {r.diag_abs(i) * (r.diag_abs(j) - split.subset.outside[uj]),
            r.row(i) * split.subset.inside[uj]};
  }
  return {r.diag_abs(j) * (r.diag_abs(i) - split.complement.outside[ui]),
          r.row(j) * split.complement.inside[ui]};
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

std::string_view to_string(DominanceClass c) {
  switch (c) {
    case DominanceClass::DD: return "DD";
    case DominanceClass::SDD: return "SDD";
    case DominanceClass::QDSDD0: return "QDSDD0";
    case DominanceClass::QDSDD: return "QDSDD";
    case DominanceClass::S_QDSDD0: return "S-QDSDD0";
    case DominanceClass::S_QDSDD: return "S-QDSDD";
    case DominanceClass::S_SDD0: return "S-SDD0";
    case DominanceClass::S_SDD: return "S-SDD";
  }
  return "?";
}

bool is_strict(DominanceClass c) {
  return c == DominanceClass::SDD || c == DominanceClass::QDSDD ||
         c == DominanceClass::S_QDSDD || c == DominanceClass::S_SDD;
}

bool needs_partition(DominanceClass c) {
  return c == DominanceClass::S_QDSDD0 || c == DominanceClass::S_QDSDD ||
         c == DominanceClass::S_SDD0 || c == DominanceClass::S_SDD;
}

std::vector<InequalitySides> inequality_table(const Tensor& t, DominanceClass cls,
                                              const SubsetPartition* part) {
  if (needs_partition(cls)) {
    if (part == nullptr) throw TensorError(std::string(to_string(cls)) + " needs a subset");
    require_matching(t, *part);
  }
  std::vector<InequalitySides> rows;
  const RadiiCache r(t);
  switch (cls) {
    case DominanceClass::DD:
    case DominanceClass::SDD:
      for (int i = 0; i < t.dim(); ++i) rows.push_back({i, -1, 0, r.diag_abs(i), r.row(i)});
      break;
    case DominanceClass::QDSDD0:
    case DominanceClass::QDSDD:
      require_pairs(t);
      for (int i = 0; i < t.dim(); ++i) {
        for (int j = 0; j < t.dim(); ++j) {
          if (i == j) continue;
          const auto [lhs, rhs] = quasi_doubly_sides(r, i, j);
          rows.push_back({i, j, 0, lhs, rhs});
        }
      }
      break;
    case DominanceClass::S_QDSDD0:
    case DominanceClass::S_QDSDD:
      require_pairs(t);
      for (int i : part->members()) {
        for (int j : part->complement()) {
          const auto [lhs, rhs] = quasi_doubly_sides(r, i, j);
          rows.push_back({i, j, 0, lhs, rhs});
          const auto [mlhs, mrhs] = quasi_doubly_sides(r, j, i);
          rows.push_back({i, j, 1, mlhs, mrhs});
        }
      }
      break;
    case DominanceClass::S_SDD0:
    case DominanceClass::S_SDD: {
      require_pairs(t);
      const PartitionRadii split = partition_radii(t, *part);
      for (int i : part->members()) {
        for (int j : part->complement()) {
          for (int which = 0; which < 2; ++which) {
            const auto [lhs, rhs] = s_sdd_sides(r, split, i, j, which);
            rows.push_back({i, j, which, lhs, rhs});
          }
        }
      }
      break;
    }
  }
  return rows;
}

ClassVerdict evaluate_class(const Tensor& t, DominanceClass cls, const SubsetPartition* part) {
  const bool strict = is_strict(cls);
  std::optional<SubsetPartition> kept;
  if (needs_partition(cls) && part != nullptr) kept = *part;
  for (const auto& row : inequality_table(t, cls, part)) {
    if (!satisfied(row.lhs, row.rhs, strict)) return fails(cls, row, kept);
  }
  return holds(cls, kept);
}

ClassVerdict is_diagonally_dominant(const Tensor& t, bool strict) {
  return evaluate_class(t, strict ? DominanceClass::SDD : DominanceClass::DD);
}

ClassVerdict is_quasi_doubly_dd(const Tensor& t, bool strict) {
  return evaluate_class(t, strict ? DominanceClass::QDSDD : DominanceClass::QDSDD0);
}

ClassVerdict is_s_qdsdd(const Tensor& t, const SubsetPartition& part, bool strict) {
  return evaluate_class(t, strict ? DominanceClass::S_QDSDD : DominanceClass::S_QDSDD0, &part);
}

ClassVerdict is_s_sdd(const Tensor& t, const SubsetPartition& part, bool strict) {
  return evaluate_class(t, strict ? DominanceClass::S_SDD : DominanceClass::S_SDD0, &part);
}

bool replay_witness(const Tensor& t, const ClassVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  const bool strict = is_strict(verdict.cls);
  double lhs = 0.0;
  double rhs = 0.0;
  // Recomputed from the tensor through the free radius functions rather than
  // a RadiiCache, so the replay shares no intermediate state with the check.
  const auto diag_abs = [&](int k) { return std::abs(t.diagonal(k)); };
  switch (verdict.cls) {
    case DominanceClass::DD:
    case DominanceClass::SDD:
      lhs = diag_abs(w.i);
      rhs = row_radius(t, w.i);
      break;
    case DominanceClass::QDSDD0:
    case DominanceClass::QDSDD:
    case DominanceClass::S_QDSDD0:
    case DominanceClass::S_QDSDD: {
      const int a = w.inequality == 0 ? w.i : w.j;
      const int b = w.inequality == 0 ? w.j : w.i;
      lhs = (diag_abs(a) - deleted_row_radius(t, a, b)) * diag_abs(b);
      rhs = row_radius(t, b) * std::abs(t.row_column(a, b));
      break;
    }
    case DominanceClass::S_SDD0:
    case DominanceClass::S_SDD: {
      if (!verdict.partition) return false;
      const auto& part = *verdict.partition;
      if (w.inequality == 0) {
        lhs = diag_abs(w.i) *
              (diag_abs(w.j) - split_radius(t, w.j, part, SplitBlock::outside));
        rhs = row_radius(t, w.i) * split_radius(t, w.j, part, SplitBlock::inside);
      } else {
        const auto comp = part.swapped();
        lhs = diag_abs(w.j) *
              (diag_abs(w.i) - split_radius(t, w.i, comp, SplitBlock::outside));
        rhs = row_radius(t, w.j) * split_radius(t, w.i, comp, SplitBlock::inside);
      }
      break;
    }
  }
  return close(lhs, w.lhs) && close(rhs, w.rhs) && !satisfied(lhs, rhs, strict);
}

std::optional<SubsetPartition> find_certifying_subset(const Tensor& t, DominanceClass cls,
                                                      int cap) {
  if (!needs_partition(cls)) {
    throw TensorError(std::string(to_string(cls)) + " is not a subset class");
  }
  if (t.dim() < 2) throw TensorError("subset search needs dimension >= 2");
  if (t.dim() > cap) {
    throw TensorError("subset search is capped at dimension " + std::to_string(cap) +
                      "; supply subsets explicitly");
  }
  std::optional<SubsetPartition> found;
  for_each_partition(t.dim(), [&](const SubsetPartition& p) {
    if (evaluate_class(t, cls, &p).holds) {
      found = p;
      return true;
    }
    return false;
  });
  return found;
}

std::string_view to_string(DiagonalSign s) {
  switch (s) {
    case DiagonalSign::all_positive: return "all_positive";
    case DiagonalSign::all_nonnegative: return "all_nonnegative";
    case DiagonalSign::mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite";
    case Definiteness::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

DiagonalSign diagonal_sign(const Tensor& t) {
  bool positive = true;
  for (int i = 0; i < t.dim(); ++i) {
    const Scalar d = t.diagonal(i);
    if (d.imag() != 0.0 || d.real() < 0.0) return DiagonalSign::mixed;
    if (d.real() == 0.0) positive = false;
  }
  return positive ? DiagonalSign::all_positive : DiagonalSign::all_nonnegative;
}

/// Walks one ladder (strict or not). Appends every evaluated verdict and
/// returns the index of the one that holds, if any.
std::optional<std::size_t> walk_ladder(const Tensor& t, const CertifyOptions& options,
                                       bool strict, std::vector<ClassVerdict>& out) {
  const DominanceClass ladder[] = {
      strict ? DominanceClass::SDD : DominanceClass::DD,
      strict ? DominanceClass::QDSDD : DominanceClass::QDSDD0,
      strict ? DominanceClass::S_QDSDD : DominanceClass::S_QDSDD0,
      strict ? DominanceClass::S_SDD : DominanceClass::S_SDD0,
  };
  for (DominanceClass cls : ladder) {
    if (!needs_partition(cls)) {
      if (cls != ladder[0] && t.dim() < 2) continue;
      out.push_back(evaluate_class(t, cls));
      if (out.back().holds) return out.size() - 1;
      continue;
    }
    if (t.dim() < 2) continue;
    if (options.search) {
      if (t.dim() > options.search_cap) continue;
      if (auto hit = find_certifying_subset(t, cls, options.search_cap)) {
        out.push_back(evaluate_class(t, cls, &*hit));
        return out.size() - 1;
      }
      // Record the first candidate's failure so the report carries a witness.
      const auto first = SubsetPartition::from_mask(t.dim(), 1);
      out.push_back(evaluate_class(t, cls, &first));
      continue;
    }
    for (const auto& p : options.partitions) {
      out.push_back(evaluate_class(t, cls, &p));
      if (out.back().holds) return out.size() - 1;
    }
  }
  return std::nullopt;
}

}  // namespace

CertificationReport certify_definiteness(const Tensor& t, const CertifyOptions& options) {
  for (const auto& p : options.partitions) require_matching(t, p);

  CertificationReport report;
  report.even_order = t.order() % 2 == 0;
  report.real = t.is_real();
  report.symmetric = t.symmetric_flag() || t.check_symmetric(1e-12);
  report.diagonal_sign = diagonal_sign(t);

  auto hit = walk_ladder(t, options, true, report.verdicts);
  if (!hit) hit = walk_ladder(t, options, false, report.verdicts);

  if (!report.even_order) report.reasons.emplace_back("odd order");
  if (!report.real) report.reasons.emplace_back("complex entries");
  if (!report.symmetric) report.reasons.emplace_back("not symmetric");
  if (report.diagonal_sign == DiagonalSign::mixed) {
    report.reasons.emplace_back("diagonal has a negative or non-real entry");
  }
  if (!hit) report.reasons.emplace_back("no dominance class holds");
  if (options.search && t.dim() > options.search_cap) {
    report.reasons.emplace_back("dimension above subset search cap");
  }
  if (!report.reasons.empty()) return report;

  const ClassVerdict& v = report.verdicts[*hit];
  report.certifying_class = v.cls;
  report.certifying_partition = v.partition;
  if (is_strict(v.cls) && report.diagonal_sign == DiagonalSign::all_positive) {
    report.conclusion = Definiteness::positive_definite;
  } else {
    report.conclusion = Definiteness::positive_semidefinite;
  }
  return report;
}

std::array<double, 3> lemma_fraction_bounds(double a, double b, double c, double d) {
  if (!(d > 0.0)) throw TensorError("lemma_fraction_bounds requires d > 0");
  if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0)) {
    throw TensorError("lemma_fraction_bounds requires a, b, c >= 0");
  }
  return {(a - (b + c)) / d, (a - b) / (c + d), a / (b + c + d)};
}

}  // namespace tensorloc
