#include "ifam/family.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ifam/errors.hpp"

namespace ifam {

SetFamily relabel(const SetFamily& family, std::span<const int> permutation) {
  const int n = family.ground_size();
  if (static_cast<int>(permutation.size()) != n)
    throw std::invalid_argument("relabel: permutation length != ground size");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int image : permutation) {
    if (image < 1 || image > n)
      throw std::invalid_argument("relabel: permutation value outside [1, n]");
    if (seen[image - 1]) throw std::invalid_argument("relabel: repeated permutation value");
    seen[image - 1] = 1;
  }
  SetFamily out{GroundSet(n)};
  for (const auto& m : family.members()) {
    SubsetBits mapped(n);
    for (int p = m.lowest_pos(); p >= 0; p = m.next_pos(p + 1))
      mapped.set(permutation[static_cast<std::size_t>(p)]);
    out.add(std::move(mapped));
  }
  return out;
}

namespace {

bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool content_line(std::string_view line) {
  for (char c : line) {
    if (c == '#') return false;
    if (c != ' ' && c != '\t' && c != '\r') return true;
  }
  return false;
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++lineno;
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (content_line(line)) lines.emplace_back(lineno, line);
      pos = end + 1;
      if (end == text.size()) break;
    }
  }
  if (lines.empty()) throw ParseError("missing header (expected n=<ground size>)", 1);

  auto [header_no, header] = lines.front();
  while (!header.empty() && (header.front() == ' ' || header.front() == '\t'))
    header.remove_prefix(1);
  while (!header.empty() && (header.back() == ' ' || header.back() == '\t'))
    header.remove_suffix(1);
  if (!header.starts_with("n="))
    throw ParseError("expected header n=<ground size>", header_no);
  int n = 0;
  if (!parse_int(header.substr(2), n))
    throw ParseError("ground size is not an integer", header_no);
  if (n < 1 || n > kMaxGroundSize)
    throw ParseError("ground size must be in [1, " + std::to_string(kMaxGroundSize) + "]",
                     header_no);

  SetFamily family{GroundSet(n)};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [lineno, line] = lines[i];
    SubsetBits member(n);
    int prev = 0;
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
      if (p >= line.size()) break;
      std::size_t q = p;
      while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
      int value = 0;
      if (!parse_int(line.substr(p, q - p), value))
        throw ParseError("member element is not an integer", lineno);
      if (value < 1 || value > n)
        throw ParseError("element " + std::to_string(value) + " outside [1, " +
                             std::to_string(n) + "]",
                         lineno);
      if (value <= prev)
        throw ParseError("elements must be strictly increasing", lineno);
      member.set(value);
      prev = value;
      p = q;
    }
    family.add(std::move(member));
  }
  return family;
}

std::string serialize_family(const SetFamily& family) {
  std::ostringstream out;
  out << "n=" << family.ground_size() << '\n';
  for (const auto& m : family.members()) {
    // An empty member has no text representation (a blank line is a skip,
    // not a member), so writing one would break the parse round-trip.
    if (m.empty())
      throw std::invalid_argument("serialize_family: empty member is not representable");
    bool first = true;
    for (int p = m.lowest_pos(); p >= 0; p = m.next_pos(p + 1)) {
      if (!first) out << ' ';
      out << p + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void save_family(const SetFamily& family, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write family file: " + path);
  out << serialize_family(family);
}

}  // namespace ifam
