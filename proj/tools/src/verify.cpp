#include "indigenous/cli/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>

#include "indigenous/finite_semiring.hpp"
#include "indigenous/graph.hpp"
#include "indigenous/ideal.hpp"
#include "indigenous/ideal_semiring.hpp"
#include "indigenous/laws.hpp"
#include "indigenous/localization.hpp"
#include "indigenous/poly.hpp"
#include "indigenous/quadratic.hpp"
#include "indigenous/series.hpp"
#include "indigenous/spectrum.hpp"

namespace indigenous::cli {

namespace {

class ClaimSink {
 public:
  explicit ClaimSink(const SemiringCtx& ctx) : prefix_("k=" + std::to_string(ctx.k()) + " ") {}

  void check(const std::string& name, const std::string& tag, const std::function<bool()>& body) {
    bool pass = false;
    try {
      pass = body();
    } catch (const std::exception&) {
      pass = false;
    }
    claims_.push_back(Claim{prefix_ + name, pass, tag});
  }

  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::string prefix_;
  std::vector<Claim> claims_;
};

bool contains(const std::vector<Ideal>& ideals, const Ideal& ideal) {
  return std::find(ideals.begin(), ideals.end(), ideal) != ideals.end();
}

}  // namespace

std::vector<Claim> core_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  sink.check("semiring and ordered information-algebra laws", "core/laws", [&] {
    const auto reports = verify_laws(ctx, kDefaultLawBound);
    return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.holds; });
  });
  sink.check("unit iff some b has a*b = 1, exactly a = 1", "core/units", [&] {
    for (const Elem a : ctx.elements()) {
      bool inverse = false;
      for (const Elem b : ctx.elements()) inverse = inverse || ctx.mul(a, b).is_one();
      if (inverse != ctx.is_unit(a) || ctx.is_unit(a) != a.is_one()) return false;
    }
    return true;
  });
  sink.check("idempotents are exactly 0, 1, m", "core/idempotents", [&] {
    for (const Elem a : ctx.elements()) {
      const bool expected = a.is_zero() || a.is_one() || a.is_many();
      if (ctx.is_idempotent(a) != expected) return false;
    }
    return true;
  });
  sink.check("not a semidomain: m*1 = m*m with 1 != m", "core/semidomain", [&] {
    return ctx.mul(Elem::many(), Elem::one()) == ctx.mul(Elem::many(), Elem::many());
  });
  return sink.take();
}

std::vector<Claim> graph_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  const auto g = IndigenousGraph(ctx);
  const std::uint32_t k = ctx.k();
  const std::size_t m = g.vertex_index(Elem::many());
  sink.check("m is adjacent to every other vertex", "graphs/structure",
             [&] { return g.degree(m) == k; });
  sink.check("1 is adjacent only to m", "graphs/structure", [&] {
    const auto& n = g.neighbors(0);
    return n.size() == 1 && n[0] == m;
  });
  sink.check("connected with diameter 1 (k=1) or 2 (k>1)", "graphs/diameter", [&] {
    return diameter(g) == ExtendedLength::finite(k == 1 ? 1 : 2);
  });
  sink.check("girth 3 for k>=3, infinite otherwise", "graphs/girth", [&] {
    return girth(g) == (k >= 3 ? ExtendedLength::finite(3) : ExtendedLength::infinite());
  });
  if (k <= kDefaultGraphSearchBound) {
    const auto omega = clique_number(g);
    sink.check("clique number >= floor(k/2)+1", "graphs/clique",
               [&] { return omega >= clique_lower_bound(k); });
    if (k <= 4) {
      static constexpr std::size_t kSmall[] = {2, 2, 3, 4};
      sink.check("clique numbers 2, 2, 3, 4 for k = 1..4", "graphs/clique",
                 [&] { return omega == kSmall[k - 1]; });
    }
    sink.check("chromatic number >= clique number >= floor(k/2)+1", "graphs/chromatic", [&] {
      const auto chi = chromatic_number(g);
      return chi >= omega && chi >= clique_lower_bound(k);
    });
  }
  if (k >= 5) {
    sink.check("{k-floor(k/2), ..., k, m} is a clique", "graphs/clique",
               [&] { return is_clique(g, explicit_clique(g)); });
  }
  return sink.take();
}

std::vector<Claim> ideal_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  const auto ideals = enumerate_ideals(ctx);
  const auto zero = zero_ideal(ctx);
  const auto whole = whole_ideal(ctx);
  const auto maximal = maximal_ideal(ctx);
  const auto smallest = smallest_nonzero_ideal(ctx);

  sink.check("{0,m} is the smallest nonzero ideal; every nonzero ideal contains m",
             "ideals/smallest", [&] {
               for (const auto& i : ideals) {
                 if (!i.is_zero() && (!i.contains(Elem::many()) || !smallest.is_subset_of(i))) return false;
               }
               return contains(ideals, smallest);
             });
  sink.check("local: S_k\\{1} is the unique maximal ideal", "ideals/local", [&] {
    std::vector<Ideal> maximals;
    for (const auto& i : ideals) {
      if (is_maximal(ctx, i)) maximals.push_back(i);
    }
    return maximals.size() == 1 && maximals[0] == maximal;
  });
  sink.check("austere: only {0} and S_k are subtractive", "ideals/subtractive", [&] {
    for (const auto& i : ideals) {
      if (is_subtractive(ctx, i) != (i == zero || i == whole)) return false;
    }
    return true;
  });
  sink.check("exactly two primes: {0} and S_k\\{1}", "ideals/primes", [&] {
    std::vector<Ideal> primes;
    for (const auto& i : ideals) {
      if (is_prime(ctx, i)) primes.push_back(i);
    }
    return primes.size() == 2 && primes[0] == zero && primes[1] == maximal;
  });
  sink.check("nonzero principal prime exists iff k <= 2", "ideals/principal-primes", [&] {
    bool found = false;
    for (const auto& [gen, ideal] : principal_ideals(ctx)) {
      found = found || (!ideal.is_zero() && is_prime(ctx, ideal));
    }
    return found == (ctx.k() <= 2);
  });
  sink.check("radical of nonzero proper ideals is S_k\\{1}; radicals are {0}, S_k\\{1}, S_k",
             "ideals/radical", [&] {
               for (const auto& i : ideals) {
                 const auto r = radical(ctx, i);
                 if (i.is_zero() && !(r == zero)) return false;
                 if (i.is_whole() && !(r == whole)) return false;
                 if (!i.is_zero() && i.is_proper() && !(r == maximal)) return false;
                 if (is_radical(ctx, i) != (i == zero || i == maximal || i == whole)) return false;
               }
               return true;
             });
  sink.check("Zariski topology is the Sierpinski space", "ideals/spectrum",
             [&] { return is_sierpinski(spectrum(ctx)); });
  return sink.take();
}

std::vector<Claim> localization_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  const auto sets = multiplicative_sets(ctx);
  sink.check("every localization is entire and zerosumfree", "localization/information-algebra",
             [&] {
               for (const auto& u : sets) {
                 const auto t = localize(ctx, u).tables();
                 if (!is_entire(t) || !is_zerosumfree(t) || !satisfies_semiring_axioms(t)) return false;
               }
               return true;
             });
  sink.check("U = {1} reproduces S_k", "localization/trivial", [&] {
    const auto l = localize(ctx, {Elem::one()});
    return l.class_count() == ctx.size() && find_isomorphism(l.tables(), tables_of(ctx)).has_value();
  });
  if (ctx.k() > 1) {
    sink.check("U with a finite a > 1 localizes to the Boolean semiring", "localization/boolean",
               [&] {
                 for (const auto& u : sets) {
                   if (!has_finite_nonunit(u)) continue;
                   const auto l = localize(ctx, u);
                   if (l.class_count() != 2) return false;
                   if (!find_isomorphism(l.tables(), boolean_semiring())) return false;
                 }
                 return true;
               });
  }
  return sink.take();
}

std::vector<Claim> ideal_semiring_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  const auto id = ideal_semiring(ctx);
  const auto& t = id.tables();
  sink.check("Id(S_k) is a semiring", "ideal-semiring/axioms",
             [&] { return satisfies_semiring_axioms(t); });
  sink.check("Id(S_k) is additively idempotent, zerosumfree and entire",
             "ideal-semiring/information-algebra",
             [&] { return is_additively_idempotent(t) && is_zerosumfree(t) && is_entire(t); });
  const auto s = id.index_of(smallest_nonzero_ideal(ctx));
  const auto m = id.index_of(maximal_ideal(ctx));
  sink.check("{0} <= {0,m} <= I <= S_k\\{1} for proper nonzero I", "ideal-semiring/chain", [&] {
    for (const auto i : id.nonzero_proper()) {
      if (!id.elements()[s].is_subset_of(id.elements()[i])) return false;
      if (!id.elements()[i].is_subset_of(id.elements()[m])) return false;
    }
    return true;
  });
  sink.check("{0,m} absorbs every nonzero ideal", "ideal-semiring/absorbing", [&] {
    for (std::size_t i = 0; i < id.elements().size(); ++i) {
      if (i != t.zero && t.product(i, s) != s) return false;
    }
    return true;
  });
  sink.check("nilpotent: n-fold products with 2^n > k equal {0,m}", "ideal-semiring/nilpotent",
             [&] { return nilpotency_index(id) <= nilpotency_guarantee(ctx.k()); });
  return sink.take();
}

std::vector<Claim> series_claims(const SemiringCtx& ctx) {
  ClaimSink sink(ctx);
  const std::size_t poly_degree = ctx.k() <= 4 ? 2 : 1;
  const auto polys = all_polys(ctx, poly_degree);
  const auto one = Poly::constant(ctx, Elem::one());

  sink.check("units of S_k[X] are exactly {1}", "series/units", [&] {
    for (const auto& f : polys) {
      bool inverse = false;
      for (const auto& g : polys) inverse = inverse || f * g == one;
      if (is_unit(f) != (f == one) || inverse != (f == one)) return false;
    }
    return true;
  });
  sink.check("idempotents of S_k[X] are exactly 0, 1, m", "series/idempotents", [&] {
    for (const auto& f : polys) {
      if (is_idempotent(f) != is_idempotent_constant(f)) return false;
    }
    return true;
  });
  sink.check("deg is a morphism to (N u {-inf}, max, +)", "series/degree", [&] {
    for (const auto& f : polys) {
      for (const auto& g : polys) {
        if (degree(f + g) != max(degree(f), degree(g))) return false;
        if (degree(f * g) != degree(f) + degree(g)) return false;
      }
    }
    return true;
  });
  sink.check("S_k[X] has no nontrivial zero divisors", "series/entire", [&] {
    for (const auto& f : polys) {
      for (const auto& g : polys) {
        if (!f.is_zero() && !g.is_zero() && (f * g).is_zero()) return false;
      }
    }
    return true;
  });
  const std::size_t depth = ctx.k() <= 3 ? 6 : 3;
  sink.check("window idempotency: structure iff squaring", "series/idempotent-windows", [&] {
    for (std::size_t n = 1; n <= depth; ++n) {
      for (const auto& f : all_windows(ctx, n)) {
        if (idempotent_by_squaring(f) != idempotent_by_structure(f)) return false;
      }
    }
    return true;
  });
  if (ctx.k() <= 3) {
    sink.check("window units are exactly the constant 1", "series/units", [&] {
      for (const auto& f : all_windows(ctx, 4)) {
        const auto inverse = inverse_by_search(f);
        if (inverse.has_value() != is_unit(f)) return false;
        if (inverse && f * *inverse != TruncSeries(ctx, f.depth(), {Elem::one()})) return false;
      }
      return true;
    });
  }
  sink.check("generated series are idempotent windows", "series/idempotent-windows", [&] {
    for (const Elem a0 : {Elem::one(), Elem::many()}) {
      for (const std::vector<std::size_t>& gens :
           {std::vector<std::size_t>{1}, {2}, {3, 5}, {4, 6, 9}, {7}}) {
        if (!is_idempotent_window(idempotent_series_from_generators(ctx, a0, gens, 12))) return false;
      }
    }
    return true;
  });
  if (ctx.k() <= kDefaultOracleBound) {
    sink.check("alpha X^2 + beta: closed form agrees with exhaustive factorization",
               "series/quadratic", [&] {
                 for (const Elem alpha : ctx.nonzero_elements()) {
                   for (const Elem beta : ctx.elements()) {
                     const auto f = Poly(ctx, {beta, Elem::zero(), alpha});
                     const bool oracle = !factorization_oracle(f).has_value();
                     if (oracle != quadratic_irreducible(ctx, alpha, beta)) return false;
                   }
                 }
                 return true;
               });
  }
  return sink.take();
}

Report verify_all(std::uint32_t k_max) {
  Report report;
  report.command = "verify-all";
  nlohmann::json per_k = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  for (std::uint32_t k = 1; k <= k_max; ++k) {
    const SemiringCtx ctx(k);
    const std::size_t before = report.claims.size();
    auto append = [&](std::vector<Claim> claims) {
      report.claims.insert(report.claims.end(), claims.begin(), claims.end());
    };
    // Families that cannot be evaluated at all (e.g. a corrupted arithmetic
    // breaking enumeration) are recorded as a single failed claim.
    auto family = [&](const char* name, std::uint32_t bound,
                      std::vector<Claim> (*claims)(const SemiringCtx&)) {
      if (k > bound) {
        skipped.push_back({{"k", k}, {"family", name}});
        return;
      }
      try {
        append(claims(ctx));
      } catch (const std::exception&) {
        report.add_claim("k=" + std::to_string(k) + " " + name + " family evaluates", false, name);
      }
    };
    family("core", kDefaultLawBound, core_claims);
    family("graphs", 2048, graph_claims);
    family("ideals", kDefaultIdealBound, ideal_claims);
    family("localization", kVerifyLocalizationBound, localization_claims);
    family("ideal-semiring", kDefaultIdealBound, ideal_semiring_claims);
    family("series", kDefaultIdealBound, series_claims);

    std::size_t failed = 0;
    for (std::size_t i = before; i < report.claims.size(); ++i) failed += !report.claims[i].pass;
    per_k.push_back({{"k", k}, {"claims", report.claims.size() - before}, {"failed", failed}});
  }
  report.payload = {{"k_max", k_max},
                    {"claims_total", report.claims.size()},
                    {"claims_failed", report.failed_claims()},
                    {"per_k", per_k},
                    {"skipped", skipped}};
  report.settle();
  return report;
}

}  // namespace indigenous::cli
