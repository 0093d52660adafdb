#include "trigroup/tri_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "trigroup/error.hpp"

namespace trigroup {
namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected an integer, got '" +
                                      std::string(tok) + "'");
  }
  return value;
}

}  // namespace

RawGluing parse_tri(std::istream& in) {
  RawGluing raw;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "triangles") {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'triangles <n>'");
      }
      raw.triangles = to_int(toks[1], line_no);
      have_header = true;
      continue;
    }
    if (toks.size() != 5 || toks[0] != "glue") {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'glue <t1> <s1> <t2> <s2>'");
    }
    raw.pairs.emplace_back(Slot{to_int(toks[1], line_no), to_int(toks[2], line_no)},
                           Slot{to_int(toks[3], line_no), to_int(toks[4], line_no)});
  }
  if (!have_header) throw Error(Errc::ParseError, "missing 'triangles <n>' header");
  return raw;
}

RawGluing parse_tri(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tri(in);
}

RawGluing read_tri_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return parse_tri(in);
}

std::string format_tri(const GluedTriangulation& tri) {
  std::ostringstream out;
  out << "triangles " << tri.triangle_count() << '\n';
  for (const auto& [a, b] : tri.to_raw().pairs) {
    out << "glue " << a.triangle << ' ' << a.side << ' ' << b.triangle << ' ' << b.side << '\n';
  }
  return out.str();
}

}  // namespace trigroup
