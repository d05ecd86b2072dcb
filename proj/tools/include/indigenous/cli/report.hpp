#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace indigenous::cli {

enum class Status { Ok, Violated, BoundExceeded };

std::string_view to_string(Status status);
/// Throws std::invalid_argument for unknown names.
Status parse_status(std::string_view text);

/// Exit codes: 0 ok, 1 claim violated, 2 usage error, 3 bound exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

int exit_code(Status status) noexcept;

/// One checked mathematical statement: its name, outcome and the topic it
/// belongs to (e.g. "graphs/girth").
struct Claim {
  std::string name;
  bool pass = false;
  std::string tag;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Report {
  std::string command;
  std::optional<std::uint32_t> k;
  Status status = Status::Ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<Claim> claims;

  void add_claim(std::string name, bool pass, std::string tag);
  /// Violated iff some claim fails; a bound-exceeded status is kept.
  void settle();
  std::size_t failed_claims() const;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Claim& claim);
void from_json(const nlohmann::json& j, Claim& claim);
void to_json(nlohmann::json& j, const Report& report);
void from_json(const nlohmann::json& j, Report& report);

}  // namespace indigenous::cli
