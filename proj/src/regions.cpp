#include "tensorloc/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace tensorloc {

namespace {

bool within(double lhs, double rhs, double slack) {
  return lhs <= rhs + slack * (1.0 + std::abs(rhs));
}

constexpr int kRingAngles = 64;
constexpr double kRingOffsets[] = {0.0, 1e-9, -1e-9, 1e-6, -1e-6, 1e-3, -1e-3};

}  // namespace

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::gamma: return "gamma";
    case RegionKind::brauer: return "brauer";
    case RegionKind::s_brauer: return "sbrauer";
    case RegionKind::omega_s: return "omega";
  }
  return "?";
}

std::optional<RegionKind> parse_region_kind(std::string_view name) {
  if (name == "gamma") return RegionKind::gamma;
  if (name == "brauer") return RegionKind::brauer;
  if (name == "sbrauer" || name == "s_brauer") return RegionKind::s_brauer;
  if (name == "omega" || name == "omega_s") return RegionKind::omega_s;
  return std::nullopt;
}

RegionSpec RegionSpec::make(RegionKind kind, std::optional<SubsetPartition> partition) {
  if (needs_partition(kind) && !partition) {
    throw TensorError(std::string(to_string(kind)) + " region needs a subset");
  }
  if (!needs_partition(kind) && partition) {
    throw TensorError(std::string(to_string(kind)) + " region takes no subset");
  }
  return RegionSpec{kind, std::move(partition)};
}

RegionEvaluator::RegionEvaluator(const Tensor& t) : radii_(t) {}

RegionEvaluator::RegionEvaluator(const Tensor& t, const SubsetPartition& part)
    : radii_(t), partition_(part), split_(partition_radii(t, part)) {}

void RegionEvaluator::require_pairs() const {
  if (dim() < 2) throw TensorError("pair-based regions need dimension >= 2");
}

const SubsetPartition& RegionEvaluator::require_partition() const {
  require_pairs();
  if (!partition_) throw TensorError("region evaluator was built without a subset");
  return *partition_;
}

bool RegionEvaluator::gamma(Scalar z, double slack) const {
  for (int i = 0; i < dim(); ++i) {
    if (within(std::abs(z - radii_.diag(i)), radii_.row(i), slack)) return true;
  }
  return false;
}

bool RegionEvaluator::brauer_pair(int i, int j, Scalar z, double slack) const {
  const double lhs = (std::abs(z - radii_.diag(i)) - radii_.deleted(i, j)) *
                     std::abs(z - radii_.diag(j));
  return within(lhs, radii_.coupling(i, j) * radii_.row(j), slack);
}

bool RegionEvaluator::brauer(Scalar z, double slack) const {
  require_pairs();
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (i != j && brauer_pair(i, j, z, slack)) return true;
    }
  }
  return false;
}

bool RegionEvaluator::s_brauer(Scalar z, double slack) const {
  const auto& part = require_partition();
  for (int i : part.members()) {
    for (int j : part.complement()) {
      if (brauer_pair(i, j, z, slack) || brauer_pair(j, i, z, slack)) return true;
    }
  }
  return false;
}

bool RegionEvaluator::omega_s(Scalar z, double slack) const {
  const auto& part = require_partition();
  const auto component = [&](int i, int j, const SplitRadii& split) {
    const auto uj = static_cast<std::size_t>(j);
    const double lhs = std::abs(z - radii_.diag(i)) *
                       (std::abs(z - radii_.diag(j)) - split.outside[uj]);
    return within(lhs, radii_.row(i) * split.inside[uj], slack);
  };
  for (int i : part.members()) {
    for (int j : part.complement()) {
      if (component(i, j, split_->subset)) return true;
    }
  }
  for (int i : part.complement()) {
    for (int j : part.members()) {
      if (component(i, j, split_->complement)) return true;
    }
  }
  return false;
}

bool RegionEvaluator::contains(RegionKind kind, Scalar z, double slack) const {
  switch (kind) {
    case RegionKind::gamma: return gamma(z, slack);
    case RegionKind::brauer: return brauer(z, slack);
    case RegionKind::s_brauer: return s_brauer(z, slack);
    case RegionKind::omega_s: return omega_s(z, slack);
  }
  return false;
}

bool gamma_contains(const Tensor& t, Scalar z) { return RegionEvaluator(t).gamma(z); }

bool brauer_contains(const Tensor& t, Scalar z) { return RegionEvaluator(t).brauer(z); }

bool s_brauer_contains(const Tensor& t, const SubsetPartition& part, Scalar z) {
  return RegionEvaluator(t, part).s_brauer(z);
}

bool omega_s_contains(const Tensor& t, const SubsetPartition& part, Scalar z) {
  return RegionEvaluator(t, part).omega_s(z);
}

Window gershgorin_bounds(const Tensor& t) {
  const RadiiCache radii(t);
  Window w{HUGE_VAL, -HUGE_VAL, HUGE_VAL, -HUGE_VAL};
  for (int i = 0; i < t.dim(); ++i) {
    const Scalar c = radii.diag(i);
    const double r = radii.row(i);
    w.re_min = std::min(w.re_min, c.real() - r);
    w.re_max = std::max(w.re_max, c.real() + r);
    w.im_min = std::min(w.im_min, c.imag() - r);
    w.im_max = std::max(w.im_max, c.imag() + r);
  }
  return w;
}

Window default_window(const Tensor& t, double margin_factor) {
  if (!(margin_factor >= 0.0)) throw TensorError("window margin must be nonnegative");
  Window w = gershgorin_bounds(t);
  const double side = std::max(w.width(), w.height());
  const double pad = side > 0.0 ? margin_factor * side : std::max(1.0, margin_factor);
  w.re_min -= pad;
  w.re_max += pad;
  w.im_min -= pad;
  w.im_max += pad;
  return w;
}

Scalar GridRaster::center(int row, int col) const {
  // (2c+1)/(2 cols) is the same rational for a cell and the middle cell of
  // its refinement by any odd factor, so shared centers are bit-identical.
  const double tc = static_cast<double>(2 * col + 1) / static_cast<double>(2 * resolution.cols);
  const double tr = static_cast<double>(2 * row + 1) / static_cast<double>(2 * resolution.rows);
  return {window.re_min + window.width() * tc, window.im_max - window.height() * tr};
}

std::size_t GridRaster::count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), char{1}));
}

GridRaster rasterize(const Tensor& t, const RegionSpec& spec, const Window& window,
                     Resolution resolution) {
  if (resolution.cols <= 0 || resolution.rows <= 0) {
    throw TensorError("raster resolution must be positive");
  }
  if (!(window.width() >= 0.0) || !(window.height() >= 0.0)) {
    throw TensorError("raster window is inverted");
  }
  if ((window.width() == 0.0 && resolution.cols > 1) ||
      (window.height() == 0.0 && resolution.rows > 1)) {
    throw TensorError("zero-area window cannot hold more than one cell per axis");
  }
  const RegionEvaluator eval = spec.partition ? RegionEvaluator(t, *spec.partition)
                                              : RegionEvaluator(t);
  GridRaster g{window, resolution, spec, {}, {}};
  if (spec.kind == RegionKind::gamma) {
    for (int i = 0; i < t.dim(); ++i) {
      g.disks.push_back({eval.radii().diag(i), eval.radii().row(i)});
    }
  }
  g.cells.resize(static_cast<std::size_t>(resolution.cols) *
                 static_cast<std::size_t>(resolution.rows));
  for (int r = 0; r < resolution.rows; ++r) {
    for (int c = 0; c < resolution.cols; ++c) {
      g.cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(resolution.cols) +
              static_cast<std::size_t>(c)] = eval.contains(spec.kind, g.center(r, c)) ? 1 : 0;
    }
  }
  return g;
}

std::string_view to_string(ChainLink link) {
  switch (link) {
    case ChainLink::omega_in_s_brauer: return "omega_s in s_brauer";
    case ChainLink::s_brauer_in_brauer: return "s_brauer in brauer";
    case ChainLink::brauer_in_gamma: return "brauer in gamma";
  }
  return "?";
}

ChainReport verify_inclusion_chain(const Tensor& t, const SubsetPartition& part,
                                   std::size_t samples, std::uint64_t seed) {
  const RegionEvaluator eval(t, part);
  ChainReport report;
  const auto check = [&](Scalar z) {
    ++report.points_checked;
    const bool omega = eval.omega_s(z);
    const bool s_brauer = eval.s_brauer(z);
    const bool brauer = eval.brauer(z);
    const bool gamma = eval.gamma(z);
    if (omega && !s_brauer) report.violations.push_back({z, ChainLink::omega_in_s_brauer});
    if (s_brauer && !brauer) report.violations.push_back({z, ChainLink::s_brauer_in_brauer});
    if (brauer && !gamma) report.violations.push_back({z, ChainLink::brauer_in_gamma});
  };

  const Window w = default_window(t);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(w.re_min, w.re_max);
  std::uniform_real_distribution<double> im(w.im_min, w.im_max);
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = re(rng);
    check({x, im(rng)});
  }

  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi / kRingAngles);
  const double start = phase(rng);
  const RadiiCache& radii = eval.radii();
  for (int i = 0; i < t.dim(); ++i) {
    const double r = radii.row(i);
    if (r == 0.0) {
      check(radii.diag(i));
      continue;
    }
    for (double offset : kRingOffsets) {
      for (int a = 0; a < kRingAngles; ++a) {
        const double theta = start + 2.0 * std::numbers::pi * a / kRingAngles;
        check(radii.diag(i) + std::polar(r * (1.0 + offset), theta));
      }
    }
  }
  return report;
}

}  // namespace tensorloc
