#include "tensorloc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>

#include "tensorloc/dominance.hpp"
#include "tensorloc/eig_oracle.hpp"
#include "tensorloc/io.hpp"
#include "tensorloc/report.hpp"

namespace tensorloc {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw TensorError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, const char* what) {
  const std::string str(trim(s));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (str.empty() || used != str.size() || !std::isfinite(v)) {
    throw TensorError(std::string("invalid ") + what + " '" + str + "'");
  }
  return v;
}

struct Settings {
  std::string input;
  std::string subset;
  std::string kind;
  std::string window;
  std::string resolution = "256x256";
  std::string output;
  std::string format = "pgm";
  int starts = 40;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
};

std::optional<SubsetPartition> optional_subset(const Settings& s, const Tensor& t) {
  if (s.subset.empty()) return std::nullopt;
  return parse_subset(s.subset, t.dim());
}

int cmd_radii(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  out << format_radii(t, optional_subset(s, t));
  return exit_code::ok;
}

int cmd_region(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  const auto kind = parse_region_kind(s.kind);
  if (!kind) throw TensorError("unknown region kind '" + s.kind + "'");
  const auto format = parse_raster_format(s.format);
  if (!format) throw TensorError("unknown raster format '" + s.format + "'");
  std::optional<SubsetPartition> part;
  if (needs_partition(*kind)) {
    if (s.subset.empty()) throw TensorError(s.kind + " region needs --subset");
    part = parse_subset(s.subset, t.dim());
  }
  const RegionSpec spec = RegionSpec::make(*kind, part);
  const Window window = s.window.empty() ? default_window(t) : parse_window(s.window);
  const GridRaster g = rasterize(t, spec, window, parse_resolution(s.resolution));
  write_file(s.output, write_raster(g, *format));
  out << to_string(*kind) << ": " << g.count() << " of " << g.cells.size()
      << " cells inside, written to " << s.output << '\n';
  return exit_code::ok;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  out << format_verdict(t, is_diagonally_dominant(t, false));
  out << format_verdict(t, is_diagonally_dominant(t, true));
  if (t.dim() < 2) return exit_code::ok;
  out << format_verdict(t, is_quasi_doubly_dd(t, false));
  out << format_verdict(t, is_quasi_doubly_dd(t, true));
  if (s.subset.empty()) return exit_code::ok;
  const DominanceClass subset_classes[] = {DominanceClass::S_QDSDD0, DominanceClass::S_QDSDD,
                                           DominanceClass::S_SDD0, DominanceClass::S_SDD};
  if (s.subset == "search") {
    for (DominanceClass cls : subset_classes) {
      if (const auto hit = find_certifying_subset(t, cls)) {
        out << format_verdict(t, evaluate_class(t, cls, &*hit));
      } else {
        out << to_string(cls) << ": no certifying subset\n";
      }
    }
    return exit_code::ok;
  }
  const SubsetPartition part = parse_subset(s.subset, t.dim());
  for (DominanceClass cls : subset_classes) {
    out << format_verdict(t, evaluate_class(t, cls, &part));
  }
  return exit_code::ok;
}

int cmd_certify(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  CertifyOptions options;
  if (s.subset == "search") {
    options.search = true;
  } else if (!s.subset.empty()) {
    options.partitions.push_back(parse_subset(s.subset, t.dim()));
  }
  const CertificationReport report = certify_definiteness(t, options);
  out << format_certification(report);
  return report.conclusion == Definiteness::inconclusive ? exit_code::inconclusive
                                                         : exit_code::ok;
}

int cmd_eig(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  if (s.starts < 1) throw TensorError("--starts must be positive");
  std::optional<SubsetPartition> part = optional_subset(s, t);
  if (!part && t.dim() >= 2) part = SubsetPartition(t.dim(), std::vector<int>{0});
  NewtonOptions options;
  options.num_starts = s.starts;
  options.seed = s.seed;
  const auto pairs = newton_eigenpairs(t, options);
  out << format_eigenpairs(t, pairs, part, 1e-8);
  const bool symmetric = t.symmetric_flag() || t.check_symmetric(1e-12);
  if (t.order() % 2 == 0 && t.is_real() && symmetric) {
    PowerOptions power;
    power.seed = s.seed;
    const EigenPair lo = shifted_power_extreme(t, Extreme::smallest, power);
    const EigenPair hi = shifted_power_extreme(t, Extreme::largest, power);
    out << "smallest H-eigenvalue: " << fixed4(lo.lambda.real()) << '\n'
        << "largest H-eigenvalue: " << fixed4(hi.lambda.real()) << '\n';
  }
  return exit_code::ok;
}

int cmd_verify_chain(const Settings& s, std::ostream& out) {
  const Tensor t = load_tensor(s.input);
  const SubsetPartition part = parse_subset(s.subset, t.dim());
  const ChainReport report = verify_inclusion_chain(t, part, s.samples, s.seed);
  out << format_chain_report(report, part);
  return report.violations.empty() ? exit_code::ok : exit_code::failed;
}

}  // namespace

SubsetPartition parse_subset(std::string_view text, int dim) {
  std::vector<int> members;
  for (auto token : split(text, ',')) {
    const int one_based = parse_int(token, "subset member");
    members.push_back(one_based - 1);
  }
  return SubsetPartition(dim, members);
}

Window parse_window(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw TensorError("window needs four numbers: re_min,re_max,im_min,im_max");
  Window w{parse_double(parts[0], "window bound"), parse_double(parts[1], "window bound"),
           parse_double(parts[2], "window bound"), parse_double(parts[3], "window bound")};
  if (w.re_min > w.re_max || w.im_min > w.im_max) throw TensorError("window bounds are inverted");
  return w;
}

Resolution parse_resolution(std::string_view text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw TensorError("resolution must look like WxH");
  Resolution r{parse_int(parts[0], "resolution"), parse_int(parts[1], "resolution")};
  if (r.cols < 1 || r.rows < 1) throw TensorError("resolution must be positive");
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue localization sets and definiteness certificates for tensors",
               "tensorloc"};
  app.require_subcommand(1, 1);
  Settings s;

  auto* radii = app.add_subcommand("radii", "Print row, deleted and split radii");
  radii->add_option("file", s.input, "Tensor file")->required();
  radii->add_option("--subset", s.subset, "Subset S as 1-based list, e.g. 1,2");

  auto* region = app.add_subcommand("region", "Rasterize a localization set");
  region->add_option("file", s.input, "Tensor file")->required();
  region->add_option("--kind", s.kind, "gamma | brauer | sbrauer | omega")->required();
  region->add_option("--subset", s.subset, "Subset S for sbrauer and omega");
  region->add_option("--window", s.window, "re_min,re_max,im_min,im_max");
  region->add_option("--res", s.resolution, "Resolution WxH")->capture_default_str();
  region->add_option("--out", s.output, "Output path")->required();
  region->add_option("--format", s.format, "pgm | csv | svg")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Evaluate the dominance classes");
  classify->add_option("file", s.input, "Tensor file")->required();
  classify->add_option("--subset", s.subset, "Subset S or 'search'");

  auto* certify = app.add_subcommand("certify", "Certify positive (semi-)definiteness");
  certify->add_option("file", s.input, "Tensor file")->required();
  certify->add_option("--subset", s.subset, "Subset S or 'search'");

  auto* eig = app.add_subcommand("eig", "Numerical eigenpairs and region checks");
  eig->add_option("file", s.input, "Tensor file")->required();
  eig->add_option("--starts", s.starts, "Newton random starts")->capture_default_str();
  eig->add_option("--seed", s.seed, "Random seed")->capture_default_str();
  eig->add_option("--subset", s.subset, "Subset S for the subset regions (default 1)");

  auto* chain = app.add_subcommand("verify-chain", "Sample-check the region inclusion chain");
  chain->add_option("file", s.input, "Tensor file")->required();
  chain->add_option("--subset", s.subset, "Subset S")->required();
  chain->add_option("--samples", s.samples, "Uniform samples")->capture_default_str();
  chain->add_option("--seed", s.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return exit_code::ok;
  } catch (const CLI::ConversionError& e) {
    err << "tensorloc: " << e.what() << '\n';
    return exit_code::data;
  } catch (const CLI::ParseError& e) {
    err << "tensorloc: " << e.what() << "\n\n" << app.help();
    return exit_code::usage;
  }

  try {
    if (radii->parsed()) return cmd_radii(s, out);
    if (region->parsed()) return cmd_region(s, out);
    if (classify->parsed()) return cmd_classify(s, out);
    if (certify->parsed()) return cmd_certify(s, out);
    if (eig->parsed()) return cmd_eig(s, out);
    if (chain->parsed()) return cmd_verify_chain(s, out);
  } catch (const IoError& e) {
    err << "tensorloc: " << e.what() << '\n';
    return e.kind() == IoError::Kind::read ? exit_code::no_input : exit_code::cant_create;
  } catch (const TensorError& e) {
    err << "tensorloc: " << e.what() << '\n';
    return exit_code::data;
  }
  err << app.help();
  return exit_code::usage;
}

}  // namespace tensorloc
