#include "indigenous/elem.hpp"

#include <charconv>
#include <ostream>

#include "indigenous/errors.hpp"

namespace indigenous {

Elem Elem::fin(std::uint32_t n) {
  if (n == 0) {
    throw InvalidArgument("Elem::fin requires n >= 1; use Elem::zero()");
  }
  return Elem{Kind::Fin, n};
}

std::string to_string(Elem e) {
  switch (e.kind()) {
    case Elem::Kind::Zero:
      return "0";
    case Elem::Kind::Many:
      return "m";
    case Elem::Kind::Fin:
      break;
  }
  return std::to_string(e.value());
}

std::ostream& operator<<(std::ostream& os, Elem e) { return os << to_string(e); }

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Elem parse_elem(std::string_view text) {
  const auto token = trim(text);
  if (token == "m" || token == "M") return Elem::many();
  if (token.empty()) throw ParseError("empty element token");
  std::uint32_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("not an element of S_k: '" + std::string(token) + "'");
  }
  return value == 0 ? Elem::zero() : Elem::fin(value);
}

std::vector<Elem> parse_elem_list(std::string_view text) {
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find_first_of(", \t", pos);
    const auto token = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (!trim(token).empty()) out.push_back(parse_elem(token));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string join(const std::vector<Elem>& elems, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += sep;
    out += to_string(elems[i]);
  }
  return out;
}

}  // namespace indigenous
