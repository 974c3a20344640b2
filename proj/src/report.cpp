#include "tensorloc/report.hpp"

#include <cstdio>
#include <sstream>

#include "tensorloc/radii.hpp"

namespace tensorloc {

namespace {

std::string label(int i) { return std::to_string(i + 1); }

std::string complex4(Scalar z) {
  if (z.imag() == 0.0) return fixed4(z.real());
  return fixed4(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed4(std::abs(z.imag())) + "i";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

/// Human form of one inequality row, e.g. "(i=1, j=3) mirror: -0.5000 < 0.3800".
std::string describe(const InequalitySides& row, DominanceClass cls) {
  const bool strict = is_strict(cls);
  const bool ok = strict ? row.lhs > row.rhs : row.lhs >= row.rhs;
  std::string where = row.j < 0 ? "(i=" + label(row.i) + ")"
                                : "(i=" + label(row.i) + ", j=" + label(row.j) + ")";
  if (needs_partition(cls)) where += row.inequality == 0 ? " first" : " second";
  std::string rel;
  if (ok) {
    rel = strict ? " > " : " >= ";
  } else {
    rel = strict ? " <= " : " < ";
  }
  return where + ": " + fixed4(row.lhs) + rel + fixed4(row.rhs);
}

}  // namespace

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string format_radii(const Tensor& t, const std::optional<SubsetPartition>& part) {
  const RadiiCache r(t);
  std::ostringstream out;
  out << "order " << t.order() << ", dim " << t.dim()
      << (t.symmetric_flag() ? ", symmetric" : "") << "\n\n";
  out << "i\tdiag\tr_i\n";
  for (int i = 0; i < t.dim(); ++i) {
    out << label(i) << '\t' << complex4(r.diag(i)) << '\t' << fixed4(r.row(i)) << '\n';
  }
  if (t.dim() >= 2) {
    out << "\nr_i^j";
    for (int j = 0; j < t.dim(); ++j) out << "\tj=" << label(j);
    out << '\n';
    for (int i = 0; i < t.dim(); ++i) {
      out << "i=" << label(i);
      for (int j = 0; j < t.dim(); ++j) out << '\t' << (i == j ? "-" : fixed4(r.deleted(i, j)));
      out << '\n';
    }
  }
  if (part) {
    const PartitionRadii split = partition_radii(t, *part);
    const std::string s = part->to_string();
    const std::string c = part->swapped().to_string();
    out << "\nsplit radii, S = " << s << ", complement = " << c << '\n';
    out << "i\tin " << s << "\tout " << s << "\tin " << c << "\tout " << c << '\n';
    for (int i = 0; i < t.dim(); ++i) {
      const auto u = static_cast<std::size_t>(i);
      out << label(i) << '\t' << fixed4(split.subset.inside[u]) << '\t'
          << fixed4(split.subset.outside[u]) << '\t' << fixed4(split.complement.inside[u])
          << '\t' << fixed4(split.complement.outside[u]) << '\n';
    }
  }
  return out.str();
}

std::string format_verdict(const Tensor& t, const ClassVerdict& v) {
  std::ostringstream out;
  out << to_string(v.cls);
  if (v.partition) out << " S=" << v.partition->to_string();
  out << ": " << (v.holds ? "holds" : "fails");
  if (v.witness) out << " at " << describe(*v.witness, v.cls);
  out << '\n';
  const SubsetPartition* p = v.partition ? &*v.partition : nullptr;
  for (const auto& row : inequality_table(t, v.cls, p)) {
    out << "  " << describe(row, v.cls) << '\n';
  }
  return out.str();
}

std::string format_certification(const CertificationReport& r) {
  std::ostringstream out;
  out << "even order: " << (r.even_order ? "yes" : "no") << '\n'
      << "real: " << (r.real ? "yes" : "no") << '\n'
      << "symmetric: " << (r.symmetric ? "yes" : "no") << '\n'
      << "diagonal: " << to_string(r.diagonal_sign) << '\n';
  for (const auto& v : r.verdicts) {
    out << "verdict " << to_string(v.cls);
    if (v.partition) out << " S=" << v.partition->to_string();
    out << ": " << (v.holds ? "holds" : "fails");
    if (v.witness) out << " at " << describe(*v.witness, v.cls);
    out << '\n';
  }
  out << "conclusion: " << to_string(r.conclusion) << '\n';
  if (r.certifying_class) {
    out << "certified by: " << to_string(*r.certifying_class);
    if (r.certifying_partition) out << " with S = " << r.certifying_partition->to_string();
    out << '\n';
  }
  for (const auto& reason : r.reasons) out << "reason: " << reason << '\n';
  return out.str();
}

std::string format_eigenpairs(const Tensor& t, const std::vector<EigenPair>& pairs,
                              const std::optional<SubsetPartition>& part, double slack) {
  std::ostringstream out;
  const bool pairs_ok = t.dim() >= 2;
  const RegionEvaluator eval = part ? RegionEvaluator(t, *part) : RegionEvaluator(t);
  out << "#\tlambda\tresidual\tgamma\tbrauer";
  if (part) out << "\tsbrauer\tomega";
  out << '\n';
  const auto mark = [](bool b) { return b ? "in" : "OUT"; };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = pairs[k];
    out << k + 1 << '\t' << complex4(p.lambda) << '\t' << sci(p.residual) << '\t'
        << mark(eval.gamma(p.lambda, slack)) << '\t'
        << (pairs_ok ? mark(eval.brauer(p.lambda, slack)) : "-");
    if (part) {
      out << '\t' << mark(eval.s_brauer(p.lambda, slack)) << '\t'
          << mark(eval.omega_s(p.lambda, slack));
    }
    out << '\n';
  }
  out << pairs.size() << " distinct eigenvalue(s)\n";
  return out.str();
}

std::string format_chain_report(const ChainReport& r, const SubsetPartition& part) {
  std::ostringstream out;
  out << "S = " << part.to_string() << ", points checked: " << r.points_checked
      << ", violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations) {
    out << "  " << to_string(v.link) << " fails at " << complex4(v.z) << '\n';
  }
  return out.str();
}

}  // namespace tensorloc
