#pragma once

#include <cstdint>
#include <vector>

#include "indigenous/cli/report.hpp"
#include "indigenous/semiring.hpp"

namespace indigenous::cli {

/// Per-module claim families for one S_k. Every claim is evaluated in
/// isolation: an exception while checking it counts as a failure.
std::vector<Claim> core_claims(const SemiringCtx& ctx);
std::vector<Claim> graph_claims(const SemiringCtx& ctx);
std::vector<Claim> ideal_claims(const SemiringCtx& ctx);
std::vector<Claim> localization_claims(const SemiringCtx& ctx);
std::vector<Claim> ideal_semiring_claims(const SemiringCtx& ctx);
std::vector<Claim> series_claims(const SemiringCtx& ctx);

/// Default largest k accepted by verify-all without --unsafe-bound.
inline constexpr std::uint32_t kVerifyAllBound = 16;
/// Largest k for the localization family, which re-verifies the fraction
/// relation for every multiplicative set.
inline constexpr std::uint32_t kVerifyLocalizationBound = 10;

/// Runs every family for k = 1..k_max and summarizes. Families whose
/// exhaustive searches exceed their bound at some k are skipped for that k
/// and listed in the payload.
Report verify_all(std::uint32_t k_max);

}  // namespace indigenous::cli
