#include "streett/word_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace streett {

namespace {

std::uint32_t parse_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParseError("fsw header: expected " + std::string(key) + "=<value>, got '" +
                     std::string(token) + "'");
  }
  std::string_view digits = token.substr(key.size() + 1);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("fsw header: bad number in '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string serialize_letter(const Letter& letter) {
  std::string out;
  bool first = true;
  for (const Edge& e : letter.edges()) {
    if (!first) out += ',';
    first = false;
    out += e.src.name();
    out += '>';
    out += e.dst.name();
  }
  return out;
}

Letter parse_letter(std::uint32_t n, std::uint32_t k, std::string_view line) {
  std::vector<Edge> edges;
  if (!line.empty()) {
    for (std::string_view token : split(line, ',')) {
      std::size_t sep = token.find('>');
      if (sep == std::string_view::npos) {
        throw ParseError("letter: expected src>dst token, got '" + std::string(token) + "'");
      }
      auto src = StateId::parse(token.substr(0, sep));
      auto dst = StateId::parse(token.substr(sep + 1));
      if (!src || !dst) throw ParseError("letter: bad state name in '" + std::string(token) + "'");
      if (!src->valid_for(n, k) || !dst->valid_for(n, k)) {
        throw ParseError("letter: state out of range in '" + std::string(token) + "'");
      }
      edges.push_back(Edge{*src, *dst});
    }
  }
  return Letter(n, k, std::move(edges));
}

std::string serialize_word(const FiniteWord& w) {
  std::string out = "fsw n=" + std::to_string(w.n()) + " k=" + std::to_string(w.k()) +
                    " len=" + std::to_string(w.size()) + "\n";
  for (const Letter& letter : w.letters()) {
    out += serialize_letter(letter);
    out += '\n';
  }
  return out;
}

FiniteWord parse_word(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  // A trailing newline yields one empty trailing element; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("fsw: empty input");

  std::vector<std::string_view> header = split(lines[0], ' ');
  if (header.size() != 4 || header[0] != "fsw") {
    throw ParseError("fsw: bad header '" + std::string(lines[0]) + "'");
  }
  std::uint32_t n = parse_field(header[1], "n");
  std::uint32_t k = parse_field(header[2], "k");
  std::uint32_t len = parse_field(header[3], "len");
  if (n == 0 || k == 0) throw ParseError("fsw: n and k must be >= 1");
  if (lines.size() != std::size_t{len} + 1) {
    throw ParseError("fsw: header says len=" + std::to_string(len) + " but found " +
                     std::to_string(lines.size() - 1) + " letter lines");
  }

  FiniteWord w(n, k);
  for (std::uint32_t i = 0; i < len; ++i) {
    try {
      w.push_back(parse_letter(n, k, lines[i + 1]));
    } catch (const ParseError& err) {
      throw ParseError("fsw line " + std::to_string(i + 2) + ": " + err.what());
    }
  }
  return w;
}

FiniteWord load_word(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open word file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word(buf.str());
}

void save_word(const FiniteWord& w, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write word file " + path.string());
  out << serialize_word(w);
  if (!out) throw std::runtime_error("error writing word file " + path.string());
}

}  // namespace streett
