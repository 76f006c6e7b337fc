#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "designforge/design.hpp"

namespace designforge {

/// Design files: `design v b`, an optional `t k lambda` line, then b lines of
/// 0-based point indices, one block per line; `-` is the empty block.
/// Repeated lines are repeated blocks. `#` lines are comments; those before
/// the header are kept. Output of format_design reads back to the same bytes.
struct DesignFile {
  std::vector<std::string> leading_comments;  // without the leading '#'
  IncidenceStructure design;
  struct Params {
    std::size_t t = 1, k = 0;
    std::uint64_t lambda = 0;
  };
  std::optional<Params> params;
};

DesignFile parse_design(std::string_view text);
std::string format_design(const DesignFile& file);

DesignFile read_design(const std::filesystem::path& path);
void write_design(const std::filesystem::path& path, const DesignFile& file);

}  // namespace designforge
