#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "designforge/perm_group.hpp"

namespace designforge {

/// Generator files: first line `degree n`, then one permutation per line,
/// either 1-based cycles `(1,2,3)(4,5)` or a 0-based image list
/// `img: 0 2 1 ...`. Lines starting with `#` are comments. Files written by
/// format_generator_file read back to the same bytes.
struct GeneratorFile {
  enum class LineKind { Comment, Cycles, Images };
  struct Line {
    LineKind kind;
    std::string comment;  // without the leading '#'
    Permutation perm;
  };

  std::size_t degree = 0;
  std::vector<std::string> leading_comments;  // before the degree line
  std::vector<Line> lines;

  std::vector<Permutation> permutations() const;
  PermGroup group() const { return PermGroup(degree, permutations()); }
};

GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const GeneratorFile& file);

/// Parses one permutation line (cycles or images) of the given degree.
Permutation parse_permutation(std::string_view line, std::size_t degree,
                              GeneratorFile::LineKind* kind = nullptr);

GeneratorFile read_generator_file(const std::filesystem::path& path);
void write_generator_file(const std::filesystem::path& path, const GeneratorFile& file);

/// Convenience: loads the group in a generator file.
PermGroup load_group(const std::filesystem::path& path);

}  // namespace designforge
