#include "indigenous/cli/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace indigenous::cli {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Ok:
      return "ok";
    case Status::Violated:
      return "violated";
    case Status::BoundExceeded:
      break;
  }
  return "bound-exceeded";
}

Status parse_status(std::string_view text) {
  if (text == "ok") return Status::Ok;
  if (text == "violated") return Status::Violated;
  if (text == "bound-exceeded") return Status::BoundExceeded;
  throw std::invalid_argument("unknown report status '" + std::string(text) + "'");
}

int exit_code(Status status) noexcept {
  switch (status) {
    case Status::Ok:
      return kExitOk;
    case Status::Violated:
      return kExitViolated;
    case Status::BoundExceeded:
      break;
  }
  return kExitBound;
}

void Report::add_claim(std::string name, bool pass, std::string tag) {
  claims.push_back(Claim{std::move(name), pass, std::move(tag)});
}

std::size_t Report::failed_claims() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return !c.pass; }));
}

void Report::settle() {
  if (status == Status::BoundExceeded) return;
  status = failed_claims() == 0 ? Status::Ok : Status::Violated;
}

void to_json(nlohmann::json& j, const Claim& claim) {
  j = nlohmann::json{{"name", claim.name}, {"pass", claim.pass}, {"tag", claim.tag}};
}

void from_json(const nlohmann::json& j, Claim& claim) {
  j.at("name").get_to(claim.name);
  j.at("pass").get_to(claim.pass);
  j.at("tag").get_to(claim.tag);
}

void to_json(nlohmann::json& j, const Report& report) {
  j = nlohmann::json{{"command", report.command},
                     {"status", std::string(to_string(report.status))},
                     {"payload", report.payload},
                     {"claims", report.claims}};
  j["k"] = report.k ? nlohmann::json(*report.k) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, Report& report) {
  j.at("command").get_to(report.command);
  report.status = parse_status(j.at("status").get<std::string>());
  report.payload = j.at("payload");
  report.claims = j.at("claims").get<std::vector<Claim>>();
  const auto& k = j.at("k");
  report.k = k.is_null() ? std::nullopt : std::optional<std::uint32_t>(k.get<std::uint32_t>());
}

}  // namespace indigenous::cli
