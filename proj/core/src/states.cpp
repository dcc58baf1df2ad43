#include "streett/states.hpp"

#include <charconv>
#include <stdexcept>

namespace streett {

bool StateId::valid_for(std::uint32_t n, std::uint32_t k) const {
  switch (role) {
    case StateRole::q:
      return index < n;
    case StateRole::g:
    case StateRole::b:
      return index >= 1 && index <= k;
    case StateRole::t:
      return index == 0;
  }
  return false;
}

std::string StateId::name() const {
  switch (role) {
    case StateRole::q:
      return "q" + std::to_string(index);
    case StateRole::g:
      return "g" + std::to_string(index);
    case StateRole::b:
      return "b" + std::to_string(index);
    case StateRole::t:
      return "t";
  }
  return "?";
}

std::optional<StateId> StateId::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text == "t") return StateId::t();
  StateRole role;
  switch (text.front()) {
    case 'q': role = StateRole::q; break;
    case 'g': role = StateRole::g; break;
    case 'b': role = StateRole::b; break;
    default: return std::nullopt;
  }
  std::uint32_t index = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return StateId{role, index};
}

std::uint32_t dense_index(StateId s, std::uint32_t n, std::uint32_t k) {
  if (!s.valid_for(n, k)) throw std::invalid_argument("state " + s.name() + " invalid for (n,k)");
  switch (s.role) {
    case StateRole::q:
      return s.index;
    case StateRole::g:
      return n + (s.index - 1);
    case StateRole::b:
      return n + k + (s.index - 1);
    case StateRole::t:
      return n + 2 * k;
  }
  throw std::logic_error("unreachable");
}

StateId state_at(std::uint32_t dense, std::uint32_t n, std::uint32_t k) {
  if (dense < n) return StateId::q(dense);
  if (dense < n + k) return StateId::g(dense - n + 1);
  if (dense < n + 2 * k) return StateId::b(dense - n - k + 1);
  if (dense == n + 2 * k) return StateId::t();
  throw std::out_of_range("dense state index out of range");
}

}  // namespace streett
