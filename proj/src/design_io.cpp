#include "designforge/design_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "designforge/errors.hpp"

namespace designforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(line[i])))
      throw ParseError("line " + std::to_string(line_no) + ": unexpected character '" +
                       std::string(1, line[i]) + "'");
    std::uint64_t v = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
      v = v * 10 + static_cast<std::uint64_t>(line[i++] - '0');
    out.push_back(v);
  }
  return out;
}

}  // namespace

DesignFile parse_design(std::string_view text) {
  DesignFile f;
  bool have_header = false;
  std::size_t v = 0, b = 0;
  // Content lines after the header, with their line numbers.
  std::vector<std::pair<std::string_view, std::size_t>> body;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.starts_with("#")) {
      if (!have_header) f.leading_comments.emplace_back(raw.substr(raw.find('#') + 1));
      continue;
    }
    if (!have_header) {
      if (line.empty()) continue;
      if (!line.starts_with("design"))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'design v b'");
      auto nums = parse_numbers(line.substr(6), line_no);
      if (nums.size() != 2) throw ParseError("header must be 'design v b'");
      v = nums[0];
      b = nums[1];
      have_header = true;
      continue;
    }
    body.emplace_back(line, line_no);
  }
  if (!have_header) throw ParseError("missing 'design v b' header");
  // A trailing newline leaves no extra line; stray blank lines at the end are ignored.
  while (!body.empty() && body.back().first.empty()) body.pop_back();
  std::size_t start = 0;
  if (body.size() == b + 1) {
    auto nums = parse_numbers(body[0].first, body[0].second);
    if (nums.size() != 3) throw ParseError("parameter line must be 't k lambda'");
    f.params = DesignFile::Params{nums[0], nums[1], nums[2]};
    start = 1;
  } else if (body.size() != b) {
    throw ParseError("header announces " + std::to_string(b) + " blocks, file has " +
                     std::to_string(body.size()) + " block lines");
  }
  std::vector<Block> blocks;
  blocks.reserve(b);
  for (std::size_t i = start; i < body.size(); ++i) {
    if (body[i].first.empty()) throw ParseError("line " + std::to_string(body[i].second) + ": empty block");
    Block B;
    if (body[i].first == "-") {
      blocks.push_back(std::move(B));
      continue;
    }
    for (auto x : parse_numbers(body[i].first, body[i].second)) {
      if (x >= v)
        throw ParseError("line " + std::to_string(body[i].second) + ": point " + std::to_string(x) +
                         " outside 0.." + std::to_string(v ? v - 1 : 0));
      B.push_back(static_cast<Point>(x));
    }
    blocks.push_back(std::move(B));
  }
  if (blocks.empty()) throw ParseError("a design needs at least one block");
  try {
    f.design = IncidenceStructure(v, std::move(blocks));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return f;
}

std::string format_design(const DesignFile& file) {
  std::ostringstream os;
  for (const auto& c : file.leading_comments) os << '#' << c << '\n';
  os << "design " << file.design.v() << ' ' << file.design.b() << '\n';
  if (file.params) os << file.params->t << ' ' << file.params->k << ' ' << file.params->lambda << '\n';
  for (const auto& B : file.design.blocks()) {
    if (B.empty()) os << '-';
    for (std::size_t i = 0; i < B.size(); ++i) os << (i ? " " : "") << B[i];
    os << '\n';
  }
  return os.str();
}

DesignFile read_design(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open design file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

void write_design(const std::filesystem::path& path, const DesignFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << format_design(file);
}

}  // namespace designforge
