#include "tensorloc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tensorloc {

namespace {

using nlohmann::json;

std::string full_precision(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void entry_error(std::size_t k, const std::string& what) {
  throw TensorFileError("entry " + std::to_string(k) + ": " + what);
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw TensorFileError(std::string("missing field \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw TensorFileError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Tensor parse_tensor_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw TensorFileError(std::string("malformed tensor file: ") + e.what());
  }
  if (!doc.is_object()) throw TensorFileError("tensor file must hold a JSON object");

  const int order = require_int(doc, "order");
  const int dim = require_int(doc, "dim");
  if (order < 2) throw TensorFileError("\"order\" must be at least 2");
  if (dim < 1) throw TensorFileError("\"dim\" must be at least 1");
  bool symmetric = false;
  if (doc.contains("symmetric")) {
    if (!doc["symmetric"].is_boolean()) throw TensorFileError("\"symmetric\" must be a boolean");
    symmetric = doc["symmetric"].get<bool>();
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw TensorFileError("missing \"entries\" array");
  }

  const json& list = doc["entries"];
  std::vector<TensorEntry> entries;
  entries.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const json& e = list[k];
    if (!e.is_object()) entry_error(k, "must be an object");
    if (!e.contains("idx") || !e["idx"].is_array()) entry_error(k, "missing \"idx\" array");
    const json& idx = e["idx"];
    if (static_cast<int>(idx.size()) != order) {
      entry_error(k, "idx has " + std::to_string(idx.size()) + " components, expected " +
                         std::to_string(order));
    }
    TensorEntry entry;
    for (const json& v : idx) {
      if (!v.is_number_integer()) entry_error(k, "idx components must be integers");
      const int one_based = v.get<int>();
      if (one_based < 1 || one_based > dim) {
        entry_error(k, "index " + std::to_string(one_based) + " out of range 1.." +
                           std::to_string(dim));
      }
      entry.index.push_back(one_based - 1);
    }
    if (!e.contains("re") || !e["re"].is_number()) entry_error(k, "missing numeric \"re\"");
    double im = 0.0;
    if (e.contains("im")) {
      if (!e["im"].is_number()) entry_error(k, "\"im\" must be numeric");
      im = e["im"].get<double>();
    }
    entry.value = Scalar(e["re"].get<double>(), im);
    if (symmetric && !std::is_sorted(entry.index.begin(), entry.index.end())) {
      entry_error(k, "unsorted representative under symmetric=true");
    }
    entries.push_back(std::move(entry));
  }

  try {
    return Tensor::build(order, dim, entries, symmetric);
  } catch (const TensorError& e) {
    // Locate the entry that build rejected; duplicates are the remaining case.
    std::vector<std::int64_t> seen;
    Tensor probe(order, dim);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::int64_t off = probe.offset_of(entries[k].index);
      if (std::find(seen.begin(), seen.end(), off) != seen.end()) {
        entry_error(k, "duplicate tuple");
      }
      seen.push_back(off);
    }
    throw TensorFileError(e.what());
  }
}

std::string serialize_tensor(const Tensor& t) {
  // Written by hand so numbers keep the %.17g round-trip form and entries
  // stay one per line.
  std::ostringstream out;
  out << "{\n  \"order\": " << t.order() << ",\n  \"dim\": " << t.dim()
      << ",\n  \"symmetric\": " << (t.symmetric_flag() ? "true" : "false")
      << ",\n  \"entries\": [";
  bool first = true;
  for (const auto& [off, value] : t.storage()) {
    const IndexTuple idx = t.tuple_of(off);
    if (t.symmetric_flag() && !std::is_sorted(idx.begin(), idx.end())) continue;
    out << (first ? "\n" : ",\n") << "    {\"idx\": [";
    for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? ", " : "") << idx[k] + 1;
    out << "], \"re\": " << full_precision(value.real());
    if (value.imag() != 0.0) out << ", \"im\": " << full_precision(value.imag());
    out << "}";
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Tensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::read, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(IoError::Kind::read, "cannot read " + path.string());
  return parse_tensor_file(buf.str());
}

std::optional<RasterFormat> parse_raster_format(std::string_view name) {
  if (name == "pgm") return RasterFormat::pgm;
  if (name == "csv") return RasterFormat::csv;
  if (name == "svg") return RasterFormat::svg;
  return std::nullopt;
}

std::string write_raster(const GridRaster& g, RasterFormat format) {
  const int cols = g.resolution.cols;
  const int rows = g.resolution.rows;
  std::ostringstream out;
  switch (format) {
    case RasterFormat::pgm:
      out << "P2\n" << cols << ' ' << rows << "\n255\n";
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          out << (c ? " " : "") << (g.at(r, c) ? 0 : 255);
        }
        out << '\n';
      }
      break;
    case RasterFormat::csv:
      out << "re,im,member\n";
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          const Scalar z = g.center(r, c);
          out << full_precision(z.real()) << ',' << full_precision(z.imag()) << ','
              << (g.at(r, c) ? 1 : 0) << '\n';
        }
      }
      break;
    case RasterFormat::svg: {
      // User space is the complex plane with the imaginary axis flipped.
      const double w = g.window.width();
      const double h = g.window.height();
      const double dx = w / cols;
      const double dy = h / rows;
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols << "\" height=\""
          << rows << "\" viewBox=\"" << full_precision(g.window.re_min) << ' '
          << full_precision(-g.window.im_max) << ' ' << full_precision(w) << ' '
          << full_precision(h) << "\" preserveAspectRatio=\"none\">\n"
          << "<g fill=\"black\" stroke=\"none\">\n";
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          if (!g.at(r, c)) continue;
          out << "<rect x=\"" << full_precision(g.window.re_min + c * dx) << "\" y=\""
              << full_precision(-g.window.im_max + r * dy) << "\" width=\""
              << full_precision(dx) << "\" height=\"" << full_precision(dy) << "\"/>\n";
        }
      }
      out << "</g>\n";
      if (!g.disks.empty()) {
        out << "<g fill=\"none\" stroke=\"red\" vector-effect=\"non-scaling-stroke\">\n";
        for (const Disk& d : g.disks) {
          out << "<circle cx=\"" << full_precision(d.center.real()) << "\" cy=\""
              << full_precision(-d.center.imag()) << "\" r=\"" << full_precision(d.radius)
              << "\"/>\n";
        }
        out << "</g>\n";
      }
      out << "</svg>\n";
      break;
    }
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(IoError::Kind::write, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(IoError::Kind::write, "cannot write " + path.string());
}

}  // namespace tensorloc
