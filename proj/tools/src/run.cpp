#include "indigenous/cli/run.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "indigenous/cli/codec.hpp"
#include "indigenous/cli/verify.hpp"
#include "indigenous/errors.hpp"
#include "indigenous/finite_semiring.hpp"
#include "indigenous/graph.hpp"
#include "indigenous/ideal.hpp"
#include "indigenous/laws.hpp"
#include "indigenous/localization.hpp"
#include "indigenous/poly.hpp"
#include "indigenous/quadratic.hpp"
#include "indigenous/series.hpp"
#include "indigenous/spectrum.hpp"

namespace indigenous::cli {

using nlohmann::json;

namespace {

constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kReadableTableBound = 32;
constexpr std::uint32_t kTableBound = 256;
constexpr std::uint32_t kGraphBuildBound = 2048;

/// A rendered command: the report plus its human-readable body.
struct Output {
  Report report;
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_text(const std::vector<Elem>& elems) { return "{" + join(elems) + "}"; }

void require_k(std::uint32_t k, std::uint32_t bound, const char* what) {
  if (k > bound) throw BoundExceeded(what, k, bound);
}

struct Options {
  std::uint32_t k = 1;
  bool json = false;
  bool unsafe = false;

  std::uint32_t bound(std::uint32_t normal) const { return unsafe ? kUnbounded : normal; }
};

// --- elem -------------------------------------------------------------

struct ElemArgs {
  std::string a, b;
  std::optional<std::uint64_t> map;
};

Output cmd_elem(const Options& o, const ElemArgs& args) {
  const SemiringCtx ctx(o.k);
  Output out;
  out.report.command = "elem";
  out.report.k = o.k;
  auto& p = out.report.payload;
  if (args.map) {
    const Elem image = ctx.canonical_map(*args.map);
    p["map"] = {{"n", *args.map}, {"image", elem_to_json(image)}};
    out.lines.push_back("map(" + std::to_string(*args.map) + ")=" + to_string(image));
  }
  if (!args.a.empty()) {
    const Elem a = parse_elem(args.a);
    ctx.check(a);
    p["a"] = elem_to_json(a);
    p["unit"] = ctx.is_unit(a);
    p["idempotent"] = ctx.is_idempotent(a);
    out.lines.push_back("a=" + to_string(a));
    out.lines.push_back("unit=" + yes_no(ctx.is_unit(a)));
    out.lines.push_back("idempotent=" + yes_no(ctx.is_idempotent(a)));
    if (!args.b.empty()) {
      const Elem b = parse_elem(args.b);
      ctx.check(b);
      p["b"] = elem_to_json(b);
      p["add"] = elem_to_json(ctx.add(a, b));
      p["mul"] = elem_to_json(ctx.mul(a, b));
      p["leq"] = ctx.leq(a, b);
      out.lines.push_back("b=" + to_string(b));
      out.lines.push_back("add=" + to_string(ctx.add(a, b)));
      out.lines.push_back("mul=" + to_string(ctx.mul(a, b)));
      out.lines.push_back("leq=" + yes_no(ctx.leq(a, b)));
    }
  }
  return out;
}

// --- table ------------------------------------------------------------

Output cmd_table(const Options& o, const std::string& op) {
  require_k(o.k, o.bound(kTableBound), "table");
  const SemiringCtx ctx(o.k);
  Output out;
  out.report = render_tables(ctx);
  if (op != "mul") out.report.payload.erase(op == "add" ? "mul" : "");
  if (op == "mul") out.report.payload.erase("add");
  if (o.k > kReadableTableBound) {
    out.warnings.push_back("warning: tables for k > " + std::to_string(kReadableTableBound) +
                           " are not readable as text");
  }
  if (op != "mul") out.lines.push_back(table_text(ctx, '+'));
  if (op != "add") out.lines.push_back(table_text(ctx, '*'));
  return out;
}

// --- laws -------------------------------------------------------------

Output cmd_laws(const Options& o) {
  const SemiringCtx ctx(o.k);
  Output out;
  out.report.command = "laws";
  out.report.k = o.k;
  json laws = json::array();
  for (const auto& r : verify_laws(ctx, o.bound(kDefaultLawBound))) {
    json entry = {{"name", r.law_name}, {"holds", r.holds}};
    if (r.counterexample) {
      entry["counterexample"] = {{"elems", elems_to_json(r.counterexample->elems)},
                                 {"naturals", r.counterexample->naturals}};
    }
    laws.push_back(entry);
    out.report.add_claim(r.law_name, r.holds, "core/laws");
  }
  out.report.payload["laws"] = laws;
  return out;
}

// --- graph ------------------------------------------------------------

struct GraphArgs {
  bool diameter = false, girth = false, clique = false, chromatic = false;
  bool edges = false, adjacency = false;
};

Output cmd_graph(const Options& o, GraphArgs args) {
  require_k(o.k, o.bound(kGraphBuildBound), "graph");
  if (!(args.diameter || args.girth || args.clique || args.chromatic || args.edges || args.adjacency)) {
    args.diameter = args.girth = args.clique = args.chromatic = true;
  }
  const auto g = build_graph(o.k);
  const std::uint32_t k = o.k;
  Output out;
  out.report.command = "graph";
  out.report.k = k;
  auto& p = out.report.payload;
  p["vertices"] = g.vertex_count();
  p["edges_count"] = g.edges().size();
  const auto length_json = [](ExtendedLength l) {
    return l.is_infinite() ? json("inf") : json(l.value());
  };
  if (args.diameter) {
    const auto d = diameter(g);
    p["diameter"] = length_json(d);
    out.lines.push_back("diameter=" + to_string(d));
    out.report.add_claim("diameter is 1 for k=1 and 2 for k>1",
                         d == ExtendedLength::finite(k == 1 ? 1 : 2), "graphs/diameter");
  }
  if (args.girth) {
    const auto gi = girth(g);
    p["girth"] = length_json(gi);
    out.lines.push_back("girth=" + to_string(gi));
    out.report.add_claim("girth is 3 for k>=3 and infinite otherwise",
                         gi == (k >= 3 ? ExtendedLength::finite(3) : ExtendedLength::infinite()),
                         "graphs/girth");
  }
  const bool exact = k <= o.bound(kDefaultGraphSearchBound);
  if ((args.clique || args.chromatic) && !exact) {
    // Past the exact-search bound only the guaranteed lower bound is known.
    p["clique_lower_bound"] = clique_lower_bound(k);
    p["exact"] = false;
    if (args.clique) p["clique_number"] = nullptr;
    if (args.chromatic) p["chromatic_number"] = nullptr;
    if (args.clique) out.lines.push_back("clique_number>=" + std::to_string(clique_lower_bound(k)));
    if (args.chromatic) out.lines.push_back("chromatic_number>=" + std::to_string(clique_lower_bound(k)));
    out.warnings.push_back("note: exact clique/chromatic search is limited to k <= " +
                           std::to_string(kDefaultGraphSearchBound) + " (use --unsafe-bound)");
    out.report.add_claim("explicit clique of size >= floor(k/2)+1",
                         is_clique(g, explicit_clique(g)) &&
                             explicit_clique(g).size() >= clique_lower_bound(k),
                         "graphs/clique");
  }
  std::optional<std::size_t> omega;
  if ((args.clique || args.chromatic) && exact) {
    omega = clique_number(g, o.bound(kDefaultGraphSearchBound));
  }
  if (args.clique && exact) {
    p["clique_number"] = *omega;
    p["clique_lower_bound"] = clique_lower_bound(k);
    out.lines.push_back("clique_number=" + std::to_string(*omega));
    out.report.add_claim("clique number >= floor(k/2)+1", *omega >= clique_lower_bound(k),
                         "graphs/clique");
  }
  if (args.chromatic && exact) {
    const auto chi = chromatic_number(g, o.bound(kDefaultGraphSearchBound));
    p["chromatic_number"] = chi;
    out.lines.push_back("chromatic_number=" + std::to_string(chi));
    out.report.add_claim("chromatic number >= clique number >= floor(k/2)+1",
                         chi >= *omega && chi >= clique_lower_bound(k), "graphs/chromatic");
  }
  if (args.edges) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
      edges.push_back({elem_to_json(g.vertex(u)), elem_to_json(g.vertex(v))});
    }
    p["edges"] = edges;
    auto text = to_edge_list(g);
    if (!text.empty()) text.pop_back();
    out.lines.push_back(text);
  }
  if (args.adjacency) {
    json adjacency = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::vector<Elem> nbrs;
      for (const auto w : g.neighbors(v)) nbrs.push_back(g.vertex(w));
      adjacency.push_back({{"vertex", elem_to_json(g.vertex(v))}, {"neighbors", elems_to_json(nbrs)}});
      out.lines.push_back(to_string(g.vertex(v)) + ": " + join(nbrs, " "));
    }
    p["adjacency"] = adjacency;
  }
  return out;
}

// --- ideals -----------------------------------------------------------

struct IdealArgs {
  bool count = false, list = false, primes = false;
  std::string radical_gens;
  std::string generated_gens;
};

Output cmd_ideals(const Options& o, IdealArgs args) {
  const SemiringCtx ctx(o.k);
  Output out;
  out.report.command = "ideals";
  out.report.k = o.k;
  auto& p = out.report.payload;
  const bool any_selector = args.count || args.list || args.primes || !args.radical_gens.empty() ||
                            !args.generated_gens.empty();
  if (!any_selector) args.list = true;

  if (args.count || args.list || args.primes) {
    const auto ideals = enumerate_ideals(ctx, o.bound(kDefaultIdealBound));
    if (args.count) {
      p["count"] = ideals.size();
      out.lines.push_back("count=" + std::to_string(ideals.size()));
    }
    if (args.list) {
      json list = json::array();
      for (const auto& i : ideals) {
        list.push_back(ideal_to_json(i));
        out.lines.push_back(set_text(i.members()));
      }
      p["ideals"] = list;
    }
    if (args.count || args.list) {
      const bool all_contain_m = std::all_of(ideals.begin(), ideals.end(), [](const Ideal& i) {
        return i.is_zero() || i.contains(Elem::many());
      });
      out.report.add_claim("every nonzero ideal contains m", all_contain_m, "ideals/smallest");
    }
    if (args.primes) {
      json primes = json::array();
      std::vector<Ideal> found;
      for (const auto& i : ideals) {
        if (!is_prime(ctx, i)) continue;
        found.push_back(i);
        primes.push_back(ideal_to_json(i));
        out.lines.push_back("prime " + set_text(i.members()));
      }
      p["primes"] = primes;
      json principal = json::array();
      for (const auto& [gen, ideal] : principal_ideals(ctx)) {
        if (!ideal.is_zero() && is_prime(ctx, ideal)) {
          principal.push_back({{"generator", elem_to_json(gen)}, {"ideal", ideal_to_json(ideal)}});
          out.lines.push_back("principal prime (" + to_string(gen) + ") = " + set_text(ideal.members()));
        }
      }
      p["principal_primes"] = principal;
      if (o.k == 1) {
        // At k = 1 the principal ideal (m) is {0, m}, which as a set is
        // S_1 \ {1}; the prime found is that ideal.
        p["note"] = "at k=1, (m) = {0,m} = S_1\\{1}";
      }
      out.report.add_claim("exactly two primes: {0} and S_k\\{1}",
                           found.size() == 2 && found[0] == zero_ideal(ctx) &&
                               found[1] == maximal_ideal(ctx),
                           "ideals/primes");
      out.report.add_claim("nonzero principal prime exists iff k <= 2",
                           principal.empty() == (o.k > 2), "ideals/principal-primes");
    }
  }
  if (!args.generated_gens.empty()) {
    const auto ideal = ideal_generated(ctx, parse_elem_list(args.generated_gens));
    p["generated"] = ideal_to_json(ideal);
    out.lines.push_back("generated=" + set_text(ideal.members()));
  }
  if (!args.radical_gens.empty()) {
    const auto ideal = ideal_generated(ctx, parse_elem_list(args.radical_gens));
    const auto r = radical(ctx, ideal);
    p["radical"] = {{"ideal", ideal_to_json(ideal)}, {"radical", ideal_to_json(r)}};
    out.lines.push_back("ideal=" + set_text(ideal.members()));
    out.lines.push_back("radical=" + set_text(r.members()));
    if (!ideal.is_zero() && ideal.is_proper()) {
      out.report.add_claim("radical of a nonzero proper ideal is S_k\\{1}", r == maximal_ideal(ctx),
                           "ideals/radical");
    }
  }
  return out;
}

// --- spec -------------------------------------------------------------

Output cmd_spec(const Options& o) {
  const SemiringCtx ctx(o.k);
  const auto view = spectrum(ctx, o.bound(kDefaultIdealBound));
  Output out;
  out.report.command = "spec";
  out.report.k = o.k;
  auto& p = out.report.payload;
  json points = json::array();
  for (const auto& pt : view.points) points.push_back(ideal_to_json(pt));
  p["points"] = points;
  p["closed_sets"] = view.closed_sets;
  p["point_count"] = view.points.size();
  p["closed_set_count"] = view.closed_sets.size();
  p["sierpinski"] = is_sierpinski(view);
  out.lines.push_back("points=" + std::to_string(view.points.size()));
  out.lines.push_back("closed=" + std::to_string(view.closed_sets.size()));
  out.lines.push_back("sierpinski=" + yes_no(is_sierpinski(view)));
  out.report.add_claim("Zariski topology is the Sierpinski space", is_sierpinski(view),
                       "ideals/spectrum");
  return out;
}

// --- localize ---------------------------------------------------------

Output cmd_localize(const Options& o, const std::string& u_text) {
  const SemiringCtx ctx(o.k);
  const auto u = parse_elem_list(u_text);
  const auto l = localize(ctx, u);
  const auto& t = l.tables();
  const bool boolean = find_isomorphism(t, boolean_semiring()).has_value();
  const bool same_as_sk = l.class_count() == ctx.size() && find_isomorphism(t, tables_of(ctx)).has_value();

  Output out;
  out.report.command = "localize";
  out.report.k = o.k;
  auto& p = out.report.payload;
  p["u"] = elems_to_json(l.multiplicative_set());
  p["classes"] = l.class_count();
  p["boolean"] = boolean;
  p["isomorphic_to_s_k"] = same_as_sk;
  json classes = json::array();
  for (const auto& cls : l.classes()) {
    json fractions = json::array();
    for (const auto& f : cls) fractions.push_back(to_string(f.numerator) + "/" + to_string(f.denominator));
    classes.push_back(fractions);
  }
  p["class_members"] = classes;
  p["add"] = t.add;
  p["mul"] = t.mul;
  out.lines.push_back("U=" + set_text(l.multiplicative_set()));
  out.lines.push_back("classes=" + std::to_string(l.class_count()));
  out.lines.push_back("boolean=" + yes_no(boolean));
  out.lines.push_back("isomorphic_to_S_k=" + yes_no(same_as_sk));

  out.report.add_claim("quotient is entire", is_entire(t), "localization/information-algebra");
  out.report.add_claim("quotient is zerosumfree", is_zerosumfree(t), "localization/information-algebra");
  if (o.k > 1 && has_finite_nonunit(l.multiplicative_set())) {
    out.report.add_claim("U with a finite a > 1 gives the Boolean semiring",
                         l.class_count() == 2 && boolean, "localization/boolean");
  }
  if (l.multiplicative_set() == std::vector<Elem>{Elem::one()}) {
    out.report.add_claim("U = {1} reproduces S_k", same_as_sk, "localization/trivial");
  }
  return out;
}

// --- poly -------------------------------------------------------------

Poly read_poly(const SemiringCtx& ctx, const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad JSON polynomial: ") + e.what());
    }
    return poly_from_json(ctx, j);
  }
  return parse_poly(ctx, text);
}

struct PolyArgs {
  std::string f, times, plus;
  bool factor = false;
};

json poly_json(const Poly& f) {
  auto j = poly_to_json(f);
  j["text"] = to_string(f);
  return j;
}

Output cmd_poly(const Options& o, const PolyArgs& args) {
  const SemiringCtx ctx(o.k);
  const auto f = read_poly(ctx, args.f);
  Output out;
  out.report.command = "poly";
  out.report.k = o.k;
  auto& p = out.report.payload;
  p["f"] = poly_json(f);
  p["degree"] = to_string(degree(f));
  p["unit"] = is_unit(f);
  p["idempotent"] = is_idempotent(f);
  out.lines.push_back("f=" + to_string(f));
  out.lines.push_back("degree=" + to_string(degree(f)));
  out.lines.push_back("unit=" + yes_no(is_unit(f)));
  out.lines.push_back("idempotent=" + yes_no(is_idempotent(f)));
  out.report.add_claim("idempotent iff f is 0, 1 or m", is_idempotent(f) == is_idempotent_constant(f),
                       "series/idempotents");
  if (!args.plus.empty()) {
    const auto g = read_poly(ctx, args.plus);
    const auto s = f + g;
    p["sum"] = poly_json(s);
    out.lines.push_back("sum=" + to_string(s));
    out.report.add_claim("deg(f+g) = max(deg f, deg g)", degree(s) == max(degree(f), degree(g)),
                         "series/degree");
  }
  if (!args.times.empty()) {
    const auto g = read_poly(ctx, args.times);
    const auto prod = f * g;
    p["product"] = poly_json(prod);
    out.lines.push_back("product=" + to_string(prod));
    out.report.add_claim("deg(fg) = deg f + deg g", degree(prod) == degree(f) + degree(g),
                         "series/degree");
  }
  if (args.factor) {
    const auto w = factorization_oracle(f, o.bound(kDefaultOracleBound));
    if (w) {
      p["factorization"] = {poly_json(w->left), poly_json(w->right)};
      out.lines.push_back("factorization=(" + to_string(w->left) + ") * (" + to_string(w->right) + ")");
    } else {
      p["factorization"] = nullptr;
      out.lines.push_back("factorization=none");
    }
  }
  return out;
}

// --- series -----------------------------------------------------------

struct SeriesArgs {
  std::size_t depth = 0;
  std::string gens;
  std::string a0 = "1";
  std::string window;
  std::string times;
};

std::vector<std::size_t> parse_naturals(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError("not a natural number: '" + token + "'");
    out.push_back(value);
  }
  return out;
}

TruncSeries read_series(const SemiringCtx& ctx, const std::string& text, std::size_t depth) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return series_from_json(ctx, json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad JSON series: ") + e.what());
    }
  }
  return parse_series(ctx, text, depth);
}

json series_json(const TruncSeries& f) {
  auto j = series_to_json(f);
  j["text"] = to_string(f);
  return j;
}

Output cmd_series(const Options& o, const SeriesArgs& args) {
  const SemiringCtx ctx(o.k);
  Output out;
  out.report.command = "series";
  out.report.k = o.k;
  auto& p = out.report.payload;

  std::optional<TruncSeries> f;
  if (!args.gens.empty()) {
    if (args.depth == 0) throw InvalidArgument("--gens needs --depth N with N >= 1");
    const auto gens = parse_naturals(args.gens);
    const Elem a0 = parse_elem(args.a0);
    f = idempotent_series_from_generators(ctx, a0, gens, args.depth);
    p["support"] = f->support();
    out.lines.push_back("support=" + [&] {
      std::string s;
      for (const auto i : f->support()) s += (s.empty() ? "" : ",") + std::to_string(i);
      return "{" + s + "}";
    }());
    out.report.add_claim("series built from a numerical semigroup is idempotent",
                         is_idempotent_window(*f), "series/idempotent-windows");
  } else {
    f = read_series(ctx, args.window, args.depth);
  }
  p["series"] = series_json(*f);
  const bool by_square = idempotent_by_squaring(*f);
  const bool by_structure = idempotent_by_structure(*f);
  p["unit"] = is_unit(*f);
  p["idempotent"] = by_square;
  p["idempotent_structural"] = by_structure;
  out.lines.insert(out.lines.begin(), "series=" + to_string(*f));
  out.lines.push_back("unit=" + yes_no(is_unit(*f)));
  out.lines.push_back("idempotent=" + yes_no(by_square));
  out.report.add_claim("structural idempotency test agrees with squaring", by_square == by_structure,
                       "series/idempotent-windows");
  if (!args.times.empty()) {
    const auto g = read_series(ctx, args.times, f->depth());
    const auto prod = *f * g;
    p["product"] = series_json(prod);
    out.lines.push_back("product=" + to_string(prod));
  }
  return out;
}

// --- irreducible ------------------------------------------------------

Output cmd_irreducible(const Options& o, const std::string& alpha_text, const std::string& beta_text) {
  const SemiringCtx ctx(o.k);
  const Elem alpha = parse_elem(alpha_text);
  const Elem beta = parse_elem(beta_text);
  const bool closed_form = quadratic_irreducible(ctx, alpha, beta);
  const auto gamma = quadratic_constant_factor(ctx, alpha, beta);
  const auto f = Poly(ctx, {beta, Elem::zero(), alpha});

  Output out;
  out.report.command = "irreducible";
  out.report.k = o.k;
  auto& p = out.report.payload;
  p["f"] = poly_json(f);
  p["irreducible"] = closed_form;
  p["constant_factor"] = gamma ? elem_to_json(*gamma) : json(nullptr);
  out.lines.push_back("f=" + to_string(f));
  out.lines.push_back("irreducible=" + yes_no(closed_form));
  if (gamma) out.lines.push_back("gamma=" + to_string(*gamma));

  const std::uint32_t oracle_bound = o.bound(kDefaultOracleBound);
  if (o.k <= oracle_bound) {
    const auto w = factorization_oracle(f, oracle_bound);
    if (w) {
      p["oracle_witness"] = {poly_json(w->left), poly_json(w->right)};
      out.lines.push_back("witness=(" + to_string(w->left) + ") * (" + to_string(w->right) + ")");
    } else {
      p["oracle_witness"] = nullptr;
    }
    out.report.add_claim("closed form agrees with exhaustive factorization", closed_form == !w,
                         "series/quadratic");
  } else {
    p["oracle_witness"] = "skipped";
    out.warnings.push_back("note: factorization oracle skipped for k > " +
                           std::to_string(kDefaultOracleBound) + " (use --unsafe-bound)");
  }
  return out;
}

// --- verify-all -------------------------------------------------------

Output cmd_verify_all(const Options& o, std::uint32_t k_max) {
  require_k(k_max, o.bound(kVerifyAllBound), "verify-all");
  Output out;
  out.report = verify_all(k_max);
  const auto& p = out.report.payload;
  for (const auto& row : p.at("per_k")) {
    out.lines.push_back("k=" + row.at("k").dump() + " claims=" + row.at("claims").dump() +
                        " failed=" + row.at("failed").dump());
  }
  out.lines.push_back("claims_total=" + p.at("claims_total").dump());
  out.lines.push_back("claims_failed=" + p.at("claims_failed").dump());
  return out;
}

std::string render_text(const Output& output, bool all_claims) {
  std::string text;
  for (const auto& line : output.lines) text += line + "\n";
  for (const auto& c : output.report.claims) {
    if (!all_claims && c.pass) continue;
    text += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name + " (" + c.tag + ")\n";
  }
  text += "status=" + std::string(to_string(output.report.status)) + "\n";
  return text;
}

}  // namespace

Report render_tables(const SemiringCtx& ctx) {
  Report report;
  report.command = "table";
  report.k = ctx.k();
  const auto elems = ctx.elements();
  json add = json::array();
  json mul = json::array();
  for (const Elem a : elems) {
    json add_row = json::array();
    json mul_row = json::array();
    for (const Elem b : elems) {
      add_row.push_back(elem_to_json(ctx.add(a, b)));
      mul_row.push_back(elem_to_json(ctx.mul(a, b)));
    }
    add.push_back(add_row);
    mul.push_back(mul_row);
  }
  report.payload = {{"elements", elems_to_json(elems)}, {"add", add}, {"mul", mul}};
  return report;
}

std::string table_text(const SemiringCtx& ctx, char op) {
  const auto elems = ctx.elements();
  std::size_t width = 1;
  for (const Elem e : elems) width = std::max(width, to_string(e).size());
  const auto cell = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  std::string out = cell(std::string(1, op)) + " |";
  for (const Elem b : elems) out += " " + cell(to_string(b));
  out += "\n" + std::string(width + 1, '-') + "+" + std::string(elems.size() * (width + 1), '-');
  for (const Elem a : elems) {
    out += "\n" + cell(to_string(a)) + " |";
    for (const Elem b : elems) out += " " + cell(to_string(op == '+' ? ctx.add(a, b) : ctx.mul(a, b)));
  }
  return out;
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact arithmetic, invariants and theorem checks for the Indigenous semirings S_k",
               "indigenous"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--unsafe-bound", o.unsafe, "Lift the exhaustive-search bounds on k");

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("k", o.k, "Order k of S_k")->required()->check(CLI::PositiveNumber);
  };

  ElemArgs elem_args;
  auto* elem = app.add_subcommand("elem", "Arithmetic on elements of S_k");
  add_k(elem);
  elem->add_option("a", elem_args.a, "Element (0..k or m)");
  elem->add_option("b", elem_args.b, "Second element for a+b, a*b, a<=b");
  elem->add_option("--map", elem_args.map, "Image of a natural number under N -> S_k");

  std::string table_op = "both";
  auto* table = app.add_subcommand("table", "Addition and multiplication tables");
  add_k(table);
  table->add_option("--op", table_op, "add, mul or both")->check(CLI::IsMember({"add", "mul", "both"}));

  auto* laws = app.add_subcommand("laws", "Exhaustive check of the semiring laws");
  add_k(laws);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "The Indigenous graph IG_k and its invariants");
  add_k(graph);
  graph->add_flag("--diameter", graph_args.diameter);
  graph->add_flag("--girth", graph_args.girth);
  graph->add_flag("--clique", graph_args.clique);
  graph->add_flag("--chromatic", graph_args.chromatic);
  graph->add_flag("--edges", graph_args.edges, "Edge list, one 'u v' per line");
  graph->add_flag("--adjacency", graph_args.adjacency, "Neighbors of every vertex");

  IdealArgs ideal_args;
  auto* ideals = app.add_subcommand("ideals", "The ideal lattice of S_k");
  add_k(ideals);
  ideals->add_flag("--count", ideal_args.count);
  ideals->add_flag("--list", ideal_args.list);
  ideals->add_flag("--primes", ideal_args.primes);
  ideals->add_option("--radical", ideal_args.radical_gens, "Radical of the ideal generated by these elements");
  ideals->add_option("--generated", ideal_args.generated_gens, "Ideal generated by these elements");

  auto* spec = app.add_subcommand("spec", "Prime spectrum and Zariski topology");
  add_k(spec);

  std::string u_text;
  auto* loc = app.add_subcommand("localize", "Localization at a multiplicative set U");
  add_k(loc);
  loc->add_option("--u", u_text, "Elements of U, e.g. 1,2,m")->required();

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Polynomials over S_k");
  add_k(poly);
  poly->add_option("f", poly_args.f, "Polynomial, e.g. '1 + m X^2' or {\"coeffs\":[1,0,\"m\"]}")->required();
  poly->add_option("--times", poly_args.times, "Multiply by this polynomial");
  poly->add_option("--plus", poly_args.plus, "Add this polynomial");
  poly->add_flag("--factor", poly_args.factor, "Exhaustive factorization (degree <= 2)");

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Truncated power series windows over S_k");
  add_k(series);
  series->add_option("--depth", series_args.depth, "Window depth N (degrees 0..N)");
  auto* gens_opt = series->add_option("--gens", series_args.gens, "Semigroup generators, e.g. 3,5");
  series->add_option("--a0", series_args.a0, "Constant term for --gens (1 or m)");
  auto* window_opt = series->add_option("--window", series_args.window, "Window to analyse");
  series->add_option("--times", series_args.times, "Multiply the window by this one");
  gens_opt->excludes(window_opt);
  window_opt->excludes(gens_opt);

  std::string alpha_text, beta_text;
  auto* irr = app.add_subcommand("irreducible", "Irreducibility of alpha X^2 + beta");
  add_k(irr);
  irr->add_option("--alpha", alpha_text)->required();
  irr->add_option("--beta", beta_text)->required();

  std::uint32_t k_max = 8;
  auto* verify = app.add_subcommand("verify-all", "Check every theorem for k = 1..k-max");
  verify->add_option("--k-max", k_max, "Largest k")->check(CLI::PositiveNumber);

  RunResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (series->parsed() && series_args.gens.empty() && series_args.window.empty()) {
      throw CLI::ValidationError("series", "one of --gens or --window is required");
    }
    if (elem->parsed() && elem_args.a.empty() && !elem_args.map) {
      throw CLI::ValidationError("elem", "an element or --map N is required");
    }
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    const auto* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    result.err = std::string("error: ") + e.what() + "\n" + failing->help();
    return result;
  }

  Output output;
  try {
    if (elem->parsed()) output = cmd_elem(o, elem_args);
    else if (table->parsed()) output = cmd_table(o, table_op);
    else if (laws->parsed()) output = cmd_laws(o);
    else if (graph->parsed()) output = cmd_graph(o, graph_args);
    else if (ideals->parsed()) output = cmd_ideals(o, ideal_args);
    else if (spec->parsed()) output = cmd_spec(o);
    else if (loc->parsed()) output = cmd_localize(o, u_text);
    else if (poly->parsed()) output = cmd_poly(o, poly_args);
    else if (series->parsed()) output = cmd_series(o, series_args);
    else if (irr->parsed()) output = cmd_irreducible(o, alpha_text, beta_text);
    else output = cmd_verify_all(o, k_max);
    output.report.settle();
  } catch (const BoundExceeded& e) {
    output = Output{};
    output.report.command = app.get_subcommands().front()->get_name();
    if (!verify->parsed()) output.report.k = o.k;
    output.report.status = Status::BoundExceeded;
    output.report.payload = {{"error", e.what()}, {"bound", e.bound()}, {"requested", e.requested()}};
    output.lines.push_back(std::string("error: ") + e.what() + " (pass --unsafe-bound to override)");
  } catch (const Error& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  for (const auto& w : output.warnings) result.err += w + "\n";
  result.out = o.json ? json(output.report).dump(2) + "\n"
                      : render_text(output, !verify->parsed());
  result.exit_code = exit_code(output.report.status);
  return result;
}

}  // namespace indigenous::cli
