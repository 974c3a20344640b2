// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "tensorloc/dominance.hpp"
#include "tensorloc/eig_oracle.hpp"
#include "tensorloc/radii.hpp"
#include "tensorloc/regions.hpp"
#include "tensorloc/report.hpp"

using namespace tensorloc;
using namespace tensorloc::testing;

namespace {

// Pinned tolerances.
constexpr double kGoldenTol = 1e-12;
constexpr double kResidualCut = 1e-10;
constexpr double kRegionSlack = 1e-8;
constexpr double kLemmaSlack = 1e-12;
constexpr double kMatrixTol = 1e-8;
constexpr double kDefiniteFloor = -1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

bool near(double a, double b, double tol = kGoldenTol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const InequalitySides* find_row(const std::vector<InequalitySides>& rows, int i, int j, int which) {
  for (const auto& r : rows) {
    if (r.i == i && r.j == j && r.inequality == which) return &r;
  }
  return nullptr;
}

// 1. Golden values of the worked example.
Outcome golden_values() {
  Outcome o;
  const Tensor t = worked_example();
  const SubsetPartition s = subset12();
  const SubsetPartition sbar = s.swapped();
  o.require(near(row_radius(t, 0), 3.8), "r_1 = " + num(row_radius(t, 0)));
  o.require(near(row_radius(t, 1), 4.5), "r_2 = " + num(row_radius(t, 1)));
  o.require(near(row_radius(t, 2), 3.5), "r_3 = " + num(row_radius(t, 2)));
  o.require(near(deleted_row_radius(t, 2, 0), 3.4), "r_3^1");
  o.require(near(split_radius(t, 0, sbar, SplitBlock::inside), 0.1), "r_1 split over {3}");
  o.require(near(split_radius(t, 1, sbar, SplitBlock::inside), 0.2), "r_2 split over {3}");

  const auto qd = inequality_table(t, DominanceClass::QDSDD0);
  const auto* q31 = find_row(qd, 2, 0, 0);
  o.require(q31 && fixed4(q31->lhs) == "-0.5000" && fixed4(q31->rhs) == "0.3800",
            "quasi-doubly pair (3,1) sides");

  const auto sd = inequality_table(t, DominanceClass::S_SDD, &s);
  const auto* a0 = find_row(sd, 0, 2, 0);
  const auto* a1 = find_row(sd, 0, 2, 1);
  const auto* b0 = find_row(sd, 1, 2, 0);
  const auto* b1 = find_row(sd, 1, 2, 1);
  o.require(a0 && a1 && b0 && b1, "S-SDD table incomplete");
  if (!o.pass) return o;
  o.require(fixed4(a1->lhs) == "4.2900" && fixed4(a1->rhs) == "0.3500", "pair (1,3) second side");
  o.require(fixed4(b1->lhs) == "5.6100" && fixed4(b1->rhs) == "0.7000", "pair (2,3) second side");
  // Definition-faithful first-side products; the verdict is what matters.
  o.require(near(a0->lhs, 7.5) && near(a0->rhs, 6.46), "pair (1,3) first side");
  o.require(near(b0->lhs, 9.0) && near(b0->rhs, 7.65), "pair (2,3) first side");
  o.require(a0->lhs > a0->rhs && b0->lhs > b0->rhs && a1->lhs > a1->rhs && b1->lhs > b1->rhs,
            "strict S-SDD inequalities");

  std::ifstream readme(TENSORLOC_README);
  std::stringstream text;
  text << readme.rdbuf();
  const std::string body = text.str();
  o.require(body.find("1.7 and 1.8") != std::string::npos &&
                body.find("1.0 and 2.5") != std::string::npos,
            "README lacks the split-radius note");
  return o;
}

// 2. Classification and certification of the worked example.
Outcome worked_classification() {
  Outcome o;
  const Tensor t = worked_example();
  const SubsetPartition s = subset12();
  const ClassVerdict qd0 = is_s_qdsdd(t, s, false);
  o.require(!qd0.holds && replay_witness(t, qd0), "S-QDSDD0 should fail with a replayable witness");
  o.require(is_s_sdd(t, s, true).holds, "S-SDD should hold");
  CertifyOptions opts;
  opts.partitions.push_back(s);
  const CertificationReport r = certify_definiteness(t, opts);
  o.require(r.conclusion == Definiteness::positive_definite, "certifier conclusion");
  const EigenPair lo = shifted_power_extreme(t, Extreme::smallest);
  o.require(lo.lambda.real() > 0.0, "smallest H-eigenvalue " + num(lo.lambda.real()));
  const auto pairs = newton_eigenpairs(t);
  o.require(!pairs.empty(), "no Newton eigenpairs");
  for (const auto& p : pairs) {
    o.require(p.lambda.real() > 0.0, "eigenvalue with Re <= 0: " + num(p.lambda.real()));
  }
  if (o.pass) {
    o.detail = "lambda_min " + fixed4(lo.lambda.real()) + ", " + std::to_string(pairs.size()) +
               " Newton eigenvalues";
  }
  return o;
}

// 3. Inclusion chain on random tensors.
Outcome inclusion_chain() {
  Outcome o;
  std::mt19937_64 rng(20240301);
  std::size_t points = 0;
  std::size_t violations = 0;
  for (int k = 0; k < 250; ++k) {
    const int m = 3 + k % 2;
    const int n = 2 + (k / 2) % 3;
    const Tensor t = k < 200 ? random_dense(rng, m, n, k % 3 == 0) : random_symmetric(rng, m, n);
    for (const auto& part : enumerate_partitions(n)) {
      const ChainReport r = verify_inclusion_chain(t, part, 10000, static_cast<std::uint64_t>(k));
      points += r.points_checked;
      violations += r.violations.size();
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.pass) o.detail = std::to_string(points) + " points, 0 violations";
  return o;
}

// 4. Every converged eigenvalue lies in all four regions.
Outcome spectrum_coverage() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t checked = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 2;
    const int m = 3 + (k / 2) % 2;
    const Tensor t = random_dense(rng, m, n, k % 3 != 0);
    NewtonOptions opts;
    opts.num_starts = 60;
    opts.seed = static_cast<std::uint64_t>(k);
    const auto pairs = newton_eigenpairs(t, opts);
    o.require(!pairs.empty(), "no eigenpairs for tensor " + std::to_string(k));
    for (const auto& part : enumerate_partitions(n)) {
      const RegionEvaluator eval(t, part);
      for (const auto& p : pairs) {
        if (!(p.residual < kResidualCut)) continue;
        ++checked;
        for (RegionKind kind : {RegionKind::gamma, RegionKind::brauer, RegionKind::s_brauer,
                                RegionKind::omega_s}) {
          o.require(eval.contains(kind, p.lambda, kRegionSlack),
                    std::string(to_string(kind)) + " misses an eigenvalue of tensor " +
                        std::to_string(k));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (eigenvalue, subset) checks";
  return o;
}

// 5. Dominance ladder on constructed tensors.
Outcome dominance_ladder() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t implications = 0;
  const auto ladder = [&](const Tensor& t, bool strict) {
    const bool dd = is_diagonally_dominant(t, strict).holds;
    const bool qd = is_quasi_doubly_dd(t, strict).holds;
    o.require(!dd || qd, "DD rung implies quasi-doubly rung");
    for (const auto& part : enumerate_partitions(t.dim())) {
      const bool sq = is_s_qdsdd(t, part, strict).holds;
      const bool ss = is_s_sdd(t, part, strict).holds;
      o.require(!qd || sq, "quasi-doubly implies subset quasi-doubly for " + part.to_string());
      o.require(!sq || ss, "subset quasi-doubly implies S-SDD for " + part.to_string());
      implications += 2;
    }
    ++implications;
  };
  for (int k = 0; k < 2000; ++k) {
    const int m = 3 + k % 2;
    const int n = 2 + (k / 2) % 3;
    const bool sdd_family = k < 1000;
    const Tensor t = sdd_family ? random_sdd(rng, m, n) : random_qdsdd_not_sdd(rng, m, n);
    // The constructions must actually land in their classes.
    if (sdd_family) {
      o.require(is_diagonally_dominant(t, true).holds, "construction is not SDD");
    } else {
      o.require(is_quasi_doubly_dd(t, true).holds && !is_diagonally_dominant(t, true).holds,
                "construction is not quasi-doubly without SDD");
    }
    ladder(t, true);
    ladder(t, false);
  }
  if (o.pass) o.detail = std::to_string(implications) + " implications, 0 violations";
  return o;
}

// 6. Monotone ordering of the three fractions.
Outcome lemma_property() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  const auto leq = [](double x, double y) {
    return x <= y + kLemmaSlack * std::max(1.0, std::max(std::abs(x), std::abs(y)));
  };
  for (int k = 0; k < 10000; ++k) {
    const double b = u(rng), c = u(rng), d = u(rng) + 1e-6;
    const double s = b + c + d;
    const auto lo = lemma_fraction_bounds(frac(rng) * s, b, c, d);
    o.require(leq(lo[0], lo[1]) && leq(lo[1], lo[2]), "branch a/(b+c+d) <= 1");
    const auto hi = lemma_fraction_bounds(s * (1.0 + 4.0 * frac(rng)), b, c, d);
    o.require(leq(hi[1], hi[0]) && leq(hi[2], hi[1]), "branch a/(b+c+d) >= 1");
  }
  if (o.pass) o.detail = "2 x 10000 samples";
  return o;
}

// 7. Order-2 tensors are matrices.
Outcome matrix_reduction() {
  Outcome o;
  std::mt19937_64 rng(123);
  std::size_t agreements = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const auto un = static_cast<std::size_t>(n);
    const Tensor t = random_dense(rng, 2, n, k % 2 == 0);
    std::vector<std::vector<Scalar>> a(un, std::vector<Scalar>(un));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.entry(std::vector<int>{i, j});
      }
    }
    const auto roots = matrix_eigenvalues(a);
    NewtonOptions opts;
    opts.seed = static_cast<std::uint64_t>(k);
    const auto pairs = newton_eigenpairs(t, opts);
    o.require(pairs.size() == un, "expected " + std::to_string(n) + " eigenvalues");
    for (const auto& r : roots) {
      const bool found = std::any_of(pairs.begin(), pairs.end(), [&](const EigenPair& p) {
        return std::abs(p.lambda - r) <= kMatrixTol * std::max(1.0, std::abs(r));
      });
      o.require(found, "characteristic root not found by Newton");
    }

    const Window w = default_window(t);
    std::uniform_real_distribution<double> re(w.re_min, w.re_max);
    std::uniform_real_distribution<double> im(w.im_min, w.im_max);
    const RegionEvaluator eval(t);
    for (int s = 0; s < 10000; ++s) {
      const Scalar z{re(rng), im(rng)};
      bool classical = false;
      for (std::size_t i = 0; i < un; ++i) {
        double radius = 0.0;
        for (std::size_t j = 0; j < un; ++j) {
          if (j != i) radius += std::abs(a[i][j]);
        }
        classical = classical || std::abs(z - a[i][i]) <= radius;
      }
      o.require(classical == eval.gamma(z), "gamma differs from classical disks");
      ++agreements;
    }
  }
  if (o.pass) o.detail = "100 matrices, " + std::to_string(agreements) + " membership agreements";
  return o;
}

// 8. Positive definite certificates survive the numerical oracle.
Outcome certifier_soundness() {
  Outcome o;
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> factor(0.4, 1.6);
  std::size_t certified = 0;
  double worst = HUGE_VAL;
  for (int k = 0; k < 500; ++k) {
    const int m = k % 5 == 0 ? 2 : (k % 7 == 0 ? 6 : 4);
    const int n = 2 + k % 3;
    const Tensor base = random_symmetric(rng, m, n);
    std::vector<TensorEntry> reps;
    IndexTuple idx(static_cast<std::size_t>(m), 0);
    do {
      if (!std::is_sorted(idx.begin(), idx.end())) continue;
      Scalar v = base.entry(idx);
      if (is_diagonal_tuple(idx)) v = factor(rng) * row_radius(base, idx[0]);
      reps.push_back({idx, v});
    } while (next_tuple(idx, n));
    const Tensor t = Tensor::build(m, n, reps, true);

    CertifyOptions opts;
    opts.search = true;
    const CertificationReport r = certify_definiteness(t, opts);
    if (r.conclusion != Definiteness::positive_definite) continue;
    ++certified;

    PowerOptions power;
    power.seed = static_cast<std::uint64_t>(k);
    double smallest = shifted_power_extreme(t, Extreme::smallest, power).lambda.real();
    NewtonOptions newton;
    newton.seed = static_cast<std::uint64_t>(k);
    for (const auto& p : newton_eigenpairs(t, newton)) {
      if (is_h_eigenpair(p)) smallest = std::min(smallest, p.lambda.real());
    }
    worst = std::min(worst, smallest);
    o.require(smallest > kDefiniteFloor,
              "tensor " + std::to_string(k) + " certified but lambda_min = " + num(smallest));
  }
  o.require(certified >= 50, "only " + std::to_string(certified) + " certificates issued");
  if (o.pass) {
    o.detail = std::to_string(certified) + " certificates, min lambda " + fixed4(worst);
  }
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 worked example golden values", 1.0, golden_values},
      {"AC2 worked example classification", 30.0, worked_classification},
      {"AC3 inclusion chain on random tensors", 300.0, inclusion_chain},
      {"AC4 eigenvalues inside all four regions", 300.0, spectrum_coverage},
      {"AC5 dominance ladder", 120.0, dominance_ladder},
      {"AC6 fraction ordering property", 1.0, lemma_property},
      {"AC7 matrix reduction", 60.0, matrix_reduction},
      {"AC8 certifier soundness", 600.0, certifier_soundness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail = "over time budget; " + o.detail;
    }
    std::printf("[%s] %s (%.2f s, budget %.0f s) %s\n", o.pass ? "PASS" : "FAIL", c.name, secs,
                c.budget_seconds, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
