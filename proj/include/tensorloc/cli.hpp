#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tensorloc/partition.hpp"
#include "tensorloc/regions.hpp"

namespace tensorloc {

/// sysexits-style codes used by the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int data = 65;
inline constexpr int no_input = 66;
inline constexpr int cant_create = 73;
}  // namespace exit_code

/// "1,2" (1-based) -> partition. Throws TensorError on bad syntax or range.
SubsetPartition parse_subset(std::string_view text, int dim);

/// "re_min,re_max,im_min,im_max"
Window parse_window(std::string_view text);

/// "WxH"
Resolution parse_resolution(std::string_view text);

/// Runs one command. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorloc
