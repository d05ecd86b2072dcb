#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace indigenous {

/// An element of the Indigenous semiring S_k: zero, a finite value 1..k, or
/// the symbol m ("many"). m is a distinct tag, never a numeric sentinel.
class Elem {
 public:
  enum class Kind : std::uint8_t { Zero = 0, Fin = 1, Many = 2 };

  constexpr Elem() noexcept = default;

  static constexpr Elem zero() noexcept { return Elem{}; }
  static constexpr Elem many() noexcept { return Elem{Kind::Many, 0}; }
  /// Finite value n. n must be >= 1; use zero() for 0.
  static Elem fin(std::uint32_t n);
  static constexpr Elem one() noexcept { return Elem{Kind::Fin, 1}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  constexpr bool is_many() const noexcept { return kind_ == Kind::Many; }
  constexpr bool is_fin() const noexcept { return kind_ == Kind::Fin; }
  constexpr bool is_one() const noexcept { return kind_ == Kind::Fin && value_ == 1; }

  /// Numeric payload; only meaningful when is_fin().
  constexpr std::uint32_t value() const noexcept { return value_; }

  /// Structural comparison. Kinds are ordered Zero < Fin < Many, which makes
  /// this the total order 0 < 1 < ... < k < m of S_k.
  friend constexpr auto operator<=>(const Elem&, const Elem&) noexcept = default;
  friend constexpr bool operator==(const Elem&, const Elem&) noexcept = default;

 private:
  constexpr Elem(Kind kind, std::uint32_t value) noexcept : kind_(kind), value_(value) {}

  Kind kind_ = Kind::Zero;
  std::uint32_t value_ = 0;
};

/// "0", "1", ..., "k", "m".
std::string to_string(Elem e);
std::ostream& operator<<(std::ostream& os, Elem e);

/// Parses the tokens produced by to_string. Surrounding whitespace is
/// ignored; anything else throws ParseError.
Elem parse_elem(std::string_view text);

/// Comma or whitespace separated element list, e.g. "1,2,m".
std::vector<Elem> parse_elem_list(std::string_view text);

std::string join(const std::vector<Elem>& elems, std::string_view sep = ",");

}  // namespace indigenous
