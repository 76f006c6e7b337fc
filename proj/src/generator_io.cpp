#include "designforge/generator_io.hpp"

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

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      out.push_back(text);
      break;
    }
    out.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) throw ParseError(std::string("empty ") + std::string(what));
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a number for " + std::string(what) + ", got '" +
                       std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

Permutation parse_permutation(std::string_view line, std::size_t degree,
                              GeneratorFile::LineKind* kind) {
  line = trim(line);
  if (line.starts_with("img:")) {
    if (kind) *kind = GeneratorFile::LineKind::Images;
    std::istringstream is{std::string(line.substr(4))};
    std::vector<Point> img;
    std::string tok;
    while (is >> tok) img.push_back(static_cast<Point>(parse_uint(tok, "image")));
    if (img.size() != degree)
      throw ParseError("image list has " + std::to_string(img.size()) + " entries, expected " +
                       std::to_string(degree));
    try {
      return Permutation(std::move(img));
    } catch (const InvalidPermutation& e) {
      throw ParseError(e.what());
    }
  }
  if (kind) *kind = GeneratorFile::LineKind::Cycles;
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    if (line[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(line));
    const auto close = line.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle: " + std::string(line));
    std::string_view body = trim(line.substr(pos + 1, close - pos - 1));
    std::vector<Point> cyc;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      const std::uint64_t v = parse_uint(tok, "cycle point");
      if (v == 0 || v > degree)
        throw ParseError("cycle point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(static_cast<Point>(v - 1));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    pos = close + 1;
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidPermutation& e) {
    throw ParseError(e.what());
  }
}

std::vector<Permutation> GeneratorFile::permutations() const {
  std::vector<Permutation> out;
  for (const auto& l : lines)
    if (l.kind != LineKind::Comment) out.push_back(l.perm);
  return out;
}

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile f;
  bool have_degree = false;
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = trim(raw);
    if (line.starts_with("#")) {
      std::string c(raw.substr(raw.find('#') + 1));
      if (have_degree)
        f.lines.push_back({GeneratorFile::LineKind::Comment, std::move(c), Permutation()});
      else
        f.leading_comments.push_back(std::move(c));
      continue;
    }
    if (line.empty()) continue;
    if (!have_degree) {
      if (!line.starts_with("degree")) throw ParseError("first line must be 'degree n'");
      f.degree = parse_uint(line.substr(6), "degree");
      have_degree = true;
      continue;
    }
    GeneratorFile::LineKind kind{};
    Permutation p = parse_permutation(line, f.degree, &kind);
    f.lines.push_back({kind, {}, std::move(p)});
  }
  if (!have_degree) throw ParseError("missing 'degree n' line");
  return f;
}

std::string format_generator_file(const GeneratorFile& file) {
  std::ostringstream os;
  for (const auto& c : file.leading_comments) os << '#' << c << '\n';
  os << "degree " << file.degree << '\n';
  for (const auto& l : file.lines) {
    switch (l.kind) {
      case GeneratorFile::LineKind::Comment:
        os << '#' << l.comment << '\n';
        break;
      case GeneratorFile::LineKind::Cycles:
        os << l.perm.to_cycle_string(true) << '\n';
        break;
      case GeneratorFile::LineKind::Images:
        os << "img:";
        for (Point x : l.perm.images()) os << ' ' << x;
        os << '\n';
        break;
    }
  }
  return os.str();
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open generator file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_generator_file(ss.str());
}

void write_generator_file(const std::filesystem::path& path, const GeneratorFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << format_generator_file(file);
}

PermGroup load_group(const std::filesystem::path& path) { return read_generator_file(path).group(); }

}  // namespace designforge
