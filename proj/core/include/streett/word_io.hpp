#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "streett/word.hpp"

namespace streett {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge tokens "src>dst" in canonical order, comma separated. An empty letter
/// serializes to an empty line.
std::string serialize_letter(const Letter& letter);
Letter parse_letter(std::uint32_t n, std::uint32_t k, std::string_view line);

/// Word file format (text, line oriented):
///   fsw n=<n> k=<k> len=<L>
///   <letter line 0>
///   ...
///   <letter line L-1>
std::string serialize_word(const FiniteWord& w);
FiniteWord parse_word(std::string_view text);

FiniteWord load_word(const std::filesystem::path& path);
void save_word(const FiniteWord& w, const std::filesystem::path& path);

}  // namespace streett
