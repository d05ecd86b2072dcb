#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "indigenous/cli/codec.hpp"
#include "indigenous/cli/report.hpp"
#include "indigenous/cli/run.hpp"
#include "indigenous/errors.hpp"
#include "indigenous/fault.hpp"

namespace indigenous::cli {
namespace {

using nlohmann::json;

RunResult run_text(const std::string& line) {
  std::vector<std::string> args;
  std::istringstream in(line);
  for (std::string word; in >> word;) args.push_back(word);
  return run(args);
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto result = run(args);
  EXPECT_EQ(result.exit_code, kExitOk) << result.err;
  return json::parse(result.out);
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(Cli, GraphClique) {
  const auto r = run_text("graph 4 --clique");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "clique_number=4\n"));
  EXPECT_EQ(run_json({"graph", "4", "--clique"})["payload"]["clique_number"], 4);
}

TEST(Cli, IdealCount) {
  EXPECT_TRUE(contains(run_text("ideals 2 --count").out, "count=4\n"));
  EXPECT_EQ(run_json({"ideals", "2", "--count"})["payload"]["count"], 4);
}

TEST(Cli, Spectrum) {
  const auto r = run_text("spec 7");
  EXPECT_TRUE(contains(r.out, "points=2\nclosed=3\nsierpinski=yes\n"));
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(Cli, ElementArithmetic) {
  const auto j = run_json({"elem", "3", "2", "2"});
  EXPECT_EQ(j["payload"]["add"], "m");
  EXPECT_EQ(j["payload"]["mul"], "m");
  EXPECT_EQ(run_json({"elem", "4", "2", "2"})["payload"]["mul"], 4);
  EXPECT_EQ(run_json({"elem", "3", "--map", "9"})["payload"]["map"]["image"], "m");
}

TEST(Cli, Tables) {
  const auto j = run_json({"table", "2"});
  EXPECT_EQ(j["payload"]["elements"], json::parse(R"([0, 1, 2, "m"])"));
  EXPECT_EQ(j["payload"]["add"][1], json::parse(R"([1, 2, "m", "m"])"));
  EXPECT_EQ(j["payload"]["mul"][3], json::parse(R"([0, "m", "m", "m"])"));
  EXPECT_TRUE(contains(run_text("table 33").err, "warning"));
  EXPECT_EQ(run_text("table 300").exit_code, kExitBound);
}

TEST(Cli, Laws) {
  const auto j = run_json({"laws", "5"});
  EXPECT_EQ(j["status"], "ok");
  EXPECT_FALSE(j["claims"].empty());
}

TEST(Cli, GraphDefaultsAndEdges) {
  const auto j = run_json({"graph", "2"});
  EXPECT_EQ(j["payload"]["diameter"], 2);
  EXPECT_EQ(j["payload"]["girth"], "inf");
  EXPECT_EQ(j["payload"]["chromatic_number"], 2);
  EXPECT_EQ(run_text("graph 2 --edges").out, "1 m\n2 m\nstatus=ok\n");
}

TEST(Cli, IdealsPrimesAndRadical) {
  const auto j = run_json({"ideals", "3", "--primes", "--radical", "2"});
  EXPECT_EQ(j["payload"]["primes"].size(), 2u);
  EXPECT_EQ(j["payload"]["radical"]["radical"], json::parse(R"([0, 2, 3, "m"])"));
  EXPECT_TRUE(j["payload"]["principal_primes"].empty());
  const auto one = run_json({"ideals", "1", "--primes"});
  EXPECT_EQ(one["payload"]["principal_primes"].size(), 1u);
  EXPECT_TRUE(one["payload"].contains("note"));
}

TEST(Cli, Localize) {
  const auto j = run_json({"localize", "4", "--u", "1,2,4,m"});
  EXPECT_EQ(j["payload"]["classes"], 2);
  EXPECT_EQ(j["payload"]["boolean"], true);
  EXPECT_EQ(run_json({"localize", "5", "--u", "1"})["payload"]["classes"], 7);
  EXPECT_EQ(run_text("localize 4 --u 1,2").exit_code, kExitUsage);
}

TEST(Cli, PolyAndSeries) {
  const auto p = run_json({"poly", "3", "1 + 2X", "--times", "2 + X"});
  EXPECT_EQ(p["payload"]["product"]["text"], "2 + m X + 2 X^2");
  const auto q = run_json({"poly", "3", R"({"coeffs":[1,0,"m"]})"});
  EXPECT_EQ(q["payload"]["f"]["text"], "1 + m X^2");
  const auto s = run_json({"series", "3", "--depth", "8", "--gens", "3,5"});
  EXPECT_EQ(s["payload"]["support"], json::parse("[3, 5, 6, 8]"));
  EXPECT_EQ(s["payload"]["idempotent"], true);
  const auto w = run_json({"series", "2", "--window", "1 + X + O(X^3)"});
  EXPECT_EQ(w["payload"]["idempotent"], false);
  EXPECT_EQ(run_text("series 2").exit_code, kExitUsage);
}

TEST(Cli, Irreducible) {
  EXPECT_EQ(run_json({"irreducible", "4", "--alpha", "2", "--beta", "3"})["payload"]["irreducible"], true);
  const auto j = run_json({"irreducible", "4", "--alpha", "2", "--beta", "4"});
  EXPECT_EQ(j["payload"]["irreducible"], false);
  EXPECT_EQ(j["payload"]["constant_factor"], 2);
  EXPECT_FALSE(j["payload"]["oracle_witness"].is_null());
  EXPECT_EQ(run_json({"irreducible", "9", "--alpha", "2", "--beta", "3"})["payload"]["oracle_witness"],
            "skipped");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_text("graph 0").exit_code, kExitUsage);
  EXPECT_EQ(run_text("nonsense 3").exit_code, kExitUsage);
  EXPECT_EQ(run_text("").exit_code, kExitUsage);
  EXPECT_EQ(run_text("poly 3 X^^2").exit_code, kExitUsage);
  EXPECT_EQ(run_text("elem 3 5").exit_code, kExitUsage);
  const auto bound = run_text("ideals 20 --count");
  EXPECT_EQ(bound.exit_code, kExitBound);
  EXPECT_TRUE(contains(bound.out, "status=bound-exceeded"));
  EXPECT_EQ(run_text("verify-all --k-max 17").exit_code, kExitBound);
  EXPECT_EQ(run_text("--help").exit_code, kExitOk);
}

TEST(Cli, UnsafeBoundLiftsLimits) {
  const auto r = run_text("graph 26 --clique --unsafe-bound");
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  const auto j = run_json({"graph", "26", "--clique"});
  EXPECT_TRUE(j["payload"]["clique_number"].is_null());
  EXPECT_EQ(j["payload"]["clique_lower_bound"], 14);
  EXPECT_EQ(j["payload"]["exact"], false);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto* line : {"graph 7", "ideals 5 --list --primes", "verify-all --k-max 3", "spec 4"}) {
    EXPECT_EQ(run_text(line).out, run_text(line).out) << line;
  }
}

TEST(Cli, VerifyAll) {
  const auto r = run_text("verify-all --k-max 4");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "claims_failed=0\n"));
}

TEST(Cli, VerifyAllCatchesInjectedFaults) {
  for (const auto fault : {testing::Fault::AddSaturatesToK, testing::Fault::MulSaturatesToK,
                           testing::Fault::ManyPlusOneIsK, testing::Fault::ZeroTimesManyIsMany}) {
    const testing::ScopedFault scoped(fault);
    const auto r = run_text("verify-all --k-max 4");
    EXPECT_EQ(r.exit_code, kExitViolated);
    EXPECT_TRUE(contains(r.out, "[FAIL]"));
  }
}

TEST(Report, JsonRoundTrip) {
  Report r;
  r.command = "graph";
  r.k = 3;
  r.payload = {{"x", 1}};
  r.add_claim("a claim", true, "graphs/x");
  r.add_claim("another", false, "graphs/y");
  r.settle();
  EXPECT_EQ(r.status, Status::Violated);
  const json j = r;
  EXPECT_EQ(j.get<Report>(), r);
  EXPECT_EQ(j["status"], "violated");

  Report no_k;
  no_k.command = "verify-all";
  EXPECT_TRUE(json(no_k)["k"].is_null());
  EXPECT_EQ(json(no_k).get<Report>(), no_k);
}

TEST(Codec, RoundTrips) {
  const SemiringCtx ctx(3);
  for (const Elem e : ctx.elements()) EXPECT_EQ(elem_from_json(elem_to_json(e)), e);
  const auto f = parse_poly(ctx, "1 + m X^2");
  EXPECT_EQ(poly_from_json(ctx, poly_to_json(f)), f);
  const TruncSeries s(ctx, 3, {Elem::many(), Elem::fin(2)});
  EXPECT_EQ(series_from_json(ctx, series_to_json(s)), s);
  EXPECT_THROW(elem_from_json(json("q")), ParseError);
  EXPECT_THROW(elem_from_json(json(-1)), ParseError);
}

}  // namespace
}  // namespace indigenous::cli
