#include "cayley/selftest.hpp"

#include "cayley/borel.hpp"
#include "cayley/bundles.hpp"
#include "cayley/chow_ring.hpp"
#include "cayley/jordan.hpp"
#include "cayley/minuscule.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

namespace cayley {

namespace {

struct Term {
  const char* coefficient;  // exact rational, e.g. "-27/8"
  const char* name;
  int h = 0;  // multiplied by H^h through Pieri
};

class Context {
 public:
  explicit Context(const SelftestOptions& o) : options(o), d(cayley_plane_diagram()) {}

  const StructureTable& table() {
    if (!table_) table_.emplace(solve_structure_constants(d));
    return *table_;
  }
  const BorelEngine& engine() {
    if (!engine_) engine_ = std::make_unique<BorelEngine>(table());
    return *engine_;
  }
  const ChernVector& normal() {
    if (!normal_) normal_.emplace(chern_normal(d));
    return *normal_;
  }
  const ChernVector& projected() {
    if (!projected_) projected_.emplace(chern_projected(normal(), d));
    return *projected_;
  }
  const std::vector<ChowClass>& segre() {
    if (!segre_) segre_.emplace(segre_classes(projected(), engine()));
    return *segre_;
  }

  NodeId id(const char* name) const {
    auto n = d.find_name(name);
    if (!n) throw std::logic_error(std::string("no class named ") + name);
    return *n;
  }

  ChowClass expect(std::initializer_list<Term> terms) const {
    ChowClass c(d.size());
    for (const auto& t : terms) {
      Rational k(t.coefficient);
      k.canonicalize();
      c += k * pieri_hk(d, id(t.name), t.h);
    }
    return c;
  }

  SelftestOptions options;
  WeightDiagram d;

 private:
  std::optional<StructureTable> table_;
  std::unique_ptr<BorelEngine> engine_;
  std::optional<ChernVector> normal_, projected_;
  std::optional<std::vector<ChowClass>> segre_;
};

// Collects comparisons; the first failure becomes the detail line.
class Checker {
 public:
  explicit Checker(const WeightDiagram& d) : d_(d) {}

  void equal(const std::string& what, const ChowClass& got, const ChowClass& want) {
    ++count_;
    if (got != want) fail(what + ": expected " + format_class(want, d_) + ", got " + format_class(got, d_));
  }
  template <class A, class B>
  void same(const std::string& what, const A& got, const B& want) {
    ++count_;
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": expected " << want << ", got " << got;
      fail(os.str());
    }
  }
  void truth(const std::string& what, bool ok) {
    ++count_;
    if (!ok) fail(what);
  }

  bool passed() const { return !failure_; }
  std::size_t count() const { return count_; }
  std::string detail(const std::string& summary) const { return failure_ ? *failure_ : summary; }

 private:
  void fail(std::string msg) {
    if (!failure_) failure_ = std::move(msg);
  }
  const WeightDiagram& d_;
  std::size_t count_ = 0;
  std::optional<std::string> failure_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void diagram_shape(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const std::vector<std::size_t> levels{1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  k.same("nodes", c.d.size(), std::size_t{27});
  k.same("codimension counts", join(c.d.level_sizes()), join(levels));
  r.passed = k.passed();
  r.detail = k.detail("27 nodes, codimension counts " + join(c.d.level_sizes()));
}

void degrees(Context& c, CriterionResult& r) {
  Checker k(c.d);
  WeightDiagram spinor = spinor_diagram();
  k.same("deg of the plane", schubert_degree(c.d, c.d.top()), std::uint64_t{78});
  k.same("deg s4p", schubert_degree(c.d, c.id("s4p")), std::uint64_t{33});
  k.same("deg s4pp", schubert_degree(c.d, c.id("s4pp")), std::uint64_t{45});
  k.same("spinor paths", spinor.path_count(spinor.top(), spinor.bottom()), std::uint64_t{12});
  r.passed = k.passed();
  r.detail = k.detail("deg = 78, deg s4p = 33, deg s4pp = 45, spinor paths top to bottom = 12");
}

void pieri(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& d = c.d;
  k.equal("H^4", pieri_hk(d, d.top(), 4), c.expect({{"1", "s4p"}, {"1", "s4pp"}}));
  k.equal("s4p H^4", pieri_hk(d, c.id("s4p"), 4), c.expect({{"1", "s8"}, {"3", "s8p"}, {"2", "s8pp"}}));
  k.equal("s4pp H^4", pieri_hk(d, c.id("s4pp"), 4), c.expect({{"1", "s8"}, {"4", "s8p"}, {"3", "s8pp"}}));
  k.equal("s8 H^4", pieri_hk(d, c.id("s8"), 4), c.expect({{"1", "s12p"}, {"1", "s12pp"}}));
  k.equal("s8p H^4", pieri_hk(d, c.id("s8p"), 4), c.expect({{"3", "s12p"}, {"4", "s12pp"}}));
  k.equal("s8pp H^4", pieri_hk(d, c.id("s8pp"), 4), c.expect({{"2", "s12p"}, {"3", "s12pp"}}));
  r.passed = k.passed();
  r.detail = k.detail("6 Pieri relations in codimensions 4, 8, 12");
}

void structure_constants(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& t = c.table();
  auto prod = [&](const char* a, const char* b) { return t.product(c.id(a), c.id(b)); };
  const ChowClass point = c.expect({{"1", "s16"}});
  const ChowClass zero(c.d.size());
  k.equal("s8^2", prod("s8", "s8"), point);
  k.equal("s4p s8", prod("s4p", "s8"), c.expect({{"1", "s12p"}}));
  k.equal("s4pp s8", prod("s4pp", "s8"), c.expect({{"1", "s12pp"}}));
  k.equal("s8p^2", prod("s8p", "s8p"), point);
  k.equal("s8pp^2", prod("s8pp", "s8pp"), point);
  k.equal("s8 s8p", prod("s8", "s8p"), zero);
  k.equal("s8p s8pp", prod("s8p", "s8pp"), zero);
  k.equal("s8 s8pp", prod("s8", "s8pp"), zero);
  k.equal("s4p s12p", prod("s4p", "s12p"), point);
  k.equal("s4pp s12pp", prod("s4pp", "s12pp"), point);
  k.equal("s4p s12pp", prod("s4p", "s12pp"), zero);
  k.equal("s4pp s12p", prod("s4pp", "s12p"), zero);
  k.equal("s4p^2", prod("s4p", "s4p"), c.expect({{"1", "s8"}, {"1", "s8p"}, {"1", "s8pp"}}));
  k.equal("s4pp^2", prod("s4pp", "s4pp"), c.expect({{"1", "s8"}, {"2", "s8p"}, {"2", "s8pp"}}));
  k.equal("s4p s4pp", prod("s4p", "s4pp"), c.expect({{"2", "s8p"}, {"1", "s8pp"}}));
  k.equal("s4p s8p", prod("s4p", "s8p"), c.expect({{"1", "s12p"}, {"2", "s12pp"}}));
  k.equal("s4p s8pp", prod("s4p", "s8pp"), c.expect({{"1", "s12p"}, {"1", "s12pp"}}));
  k.equal("s4pp s8p", prod("s4pp", "s8p"), c.expect({{"2", "s12p"}, {"2", "s12pp"}}));
  k.equal("s4pp s8pp", prod("s4pp", "s8pp"), c.expect({{"1", "s12p"}, {"2", "s12pp"}}));

  const auto& res = t.resolution();
  k.same("linear relation", std::to_string(res.a1.get_si()) + "*g1 + " + std::to_string(res.a2.get_si()) +
                                "*g2 = " + std::to_string(res.c.get_si()),
         std::string("7*g1 + 5*g2 = 19"));
  k.same("nonnegative solutions", res.line_points.size(), std::size_t{1});
  k.same("gamma0", res.gamma[0], Integer(0));
  k.same("gamma1", res.gamma[1], Integer(2));
  k.same("gamma2", res.gamma[2], Integer(1));
  r.passed = k.passed();
  r.detail = k.detail(std::to_string(k.count() - 5) + " products, 7*g1 + 5*g2 = 19 with unique solution (2, 1)");
}

void borel_expansions(Context& c, CriterionResult& r) {
  Checker k(c.d);
  auto e = invariant_generators();
  struct Line {
    int degree;
    ChowClass want;
  };
  const std::vector<Line> lines{
      {2, c.expect({{"-3/4", "s2"}})},
      {4, c.expect({{"-27/8", "s4p"}, {"21/8", "s4pp"}})},
      {5, c.expect({{"3/16", "s5p"}, {"-21/32", "s5pp"}})},
      {6, c.expect({{"-27/16", "s6p"}, {"87/32", "s6pp"}})},
      {8, c.expect({{"21/128", "s8"}, {"291/256", "s8p"}, {"-519/256", "s8pp"}})},
  };
  for (const auto& line : lines) {
    std::string name = "e" + std::to_string(line.degree);
    k.equal(name + " (divided differences)", expand_invariant(e.e(line.degree), c.d), line.want);
    k.equal(name + " (functionals)", c.engine().expand(e.e(line.degree)), line.want);
  }
  k.equal("e2 = -3/4 H^2", expand_invariant(e.e2, c.d), c.expect({{"-3/4", "s0", 2}}));
  r.passed = k.passed();
  r.detail = k.detail("e2, e4, e5, e6, e8 by both routes, e.g. e8 = " +
                      format_class(expand_invariant(e.e8, c.d), c.d));
}

void two_engines(Context& c, CriterionResult& r) {
  Checker k(c.d);
  std::size_t pairs = 0;
  for (NodeId u = 0; u < c.d.size(); ++u) {
    for (NodeId v = 0; v < c.d.size(); ++v) {
      if (c.d.length(u) + c.d.length(v) > c.d.max_length()) continue;
      ++pairs;
      k.equal(c.d.name(u) + " * " + c.d.name(v), c.engine().multiply(u, v), c.table().product(u, v));
    }
  }
  r.passed = k.passed();
  r.detail = k.detail(std::to_string(pairs) + " admissible pairs, 0 mismatches");
}

void chern(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& n = c.normal().classes;
  const std::vector<ChowClass> want{
      c.expect({{"1", "s0"}}),
      c.expect({{"15", "s0", 1}}),
      c.expect({{"102", "s0", 2}}),
      c.expect({{"414", "s0", 3}}),
      c.expect({{"1107", "s4p"}, {"1113", "s4pp"}}),
      c.expect({{"2025", "s4p", 1}, {"2079", "s4pp", 1}}),
      c.expect({{"5292", "s6p"}, {"8034", "s6pp"}}),
      c.expect({{"4698", "s6p", 1}, {"7218", "s6pp", 1}}),
      c.expect({{"2751", "s8"}, {"9786", "s8p"}, {"7032", "s8pp"}}),
      c.expect({{"963", "s8", 1}, {"3438", "s8p", 1}, {"2466", "s8pp", 1}}),
      c.expect({{"153", "s8", 2}, {"549", "s8p", 2}, {"387", "s8pp", 2}}),
  };
  k.same("rank", c.normal().rank, 10);
  k.same("number of classes", n.size(), want.size());
  for (std::size_t i = 1; i < want.size() && i < n.size(); ++i) {
    k.equal("c" + std::to_string(i), n[i], want[i]);
    k.truth("c" + std::to_string(i) + " integral", n[i].is_integral());
  }
  r.passed = k.passed();
  r.detail = k.detail("c1..c10 integral and exact, c10 = " + format_class(n.back(), c.d));
}

void projected(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& p = c.projected().classes;
  const std::vector<ChowClass> want{
      c.expect({{"1", "s0"}}),
      c.expect({{"14", "s0", 1}}),
      c.expect({{"88", "s0", 2}}),
      c.expect({{"326", "s0", 3}}),
      c.expect({{"781", "s4p"}, {"787", "s4pp"}}),
      c.expect({{"2536", "s5p"}, {"1292", "s5pp"}}),
      c.expect({{"2756", "s6p"}, {"4206", "s6pp"}}),
      c.expect({{"1942", "s7p"}, {"4954", "s7pp"}}),
      c.expect({{"809", "s8"}, {"2890", "s8p"}, {"2078", "s8pp"}}),
      c.expect({{"702", "s9p"}, {"936", "s9pp"}}),
  };
  k.same("rank", c.projected().rank, 9);
  k.same("number of classes", p.size(), want.size());
  for (std::size_t i = 1; i < want.size() && i < p.size(); ++i) k.equal("cbar" + std::to_string(i), p[i], want[i]);
  k.equal("cbar5 as H-multiples", p.at(5), c.expect({{"1244", "s4p", 1}, {"1292", "s4pp", 1}}));
  k.equal("cbar7 as H-multiples", p.at(7), c.expect({{"1942", "s6p", 1}, {"3012", "s6pp", 1}}));
  k.equal("cbar9 as H-multiples", p.at(9), c.expect({{"154", "s8", 1}, {"548", "s8p", 1}, {"388", "s8pp", 1}}));
  // The degree-10 term of c(N)/(1 + H), recomputed here.
  ChowClass top = c.normal().classes.at(10) - pieri_hk(c.d, p.at(9), 1);
  k.equal("cbar10", top, ChowClass(c.d.size()));
  k.equal("cbar10 as H-multiples", c.expect({{"-1", "s8", 2}, {"1", "s8p", 2}, {"-1", "s8pp", 2}}),
          ChowClass(c.d.size()));
  r.passed = k.passed();
  r.detail = k.detail("cbar1..cbar9 exact, cbar10 = 0");
}

void segre(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& s = c.segre();
  const std::vector<ChowClass> want{
      c.expect({{"1", "s0"}}),
      c.expect({{"14", "s0", 1}}),
      c.expect({{"108", "s0", 2}}),
      c.expect({{"606", "s0", 3}}),
      c.expect({{"2763", "s4p"}, {"2757", "s4pp"}}),
      c.expect({{"21624", "s5p"}, {"10752", "s5pp"}}),
      c.expect({{"75492", "s6p"}, {"112602", "s6pp"}}),
      c.expect({{"240534", "s7p"}, {"596598", "s7pp"}}),
      c.expect({{"711489", "s8"}, {"2462397", "s8p"}, {"1750947", "s8pp"}}),
      c.expect({{"8768196", "s9p"}, {"11600304", "s9pp"}}),
      c.expect({{"53127900", "s10p"}, {"30193704", "s10pp"}}),
      c.expect({{"206857602", "s11p"}, {"74823228", "s11pp"}}),
      c.expect({{"491985531", "s12p"}, {"669523221", "s12pp"}}),
      c.expect({{"2657712312", "s13"}}),
      c.expect({{"5875513812", "s14"}}),
      c.expect({{"12591161406", "s15"}}),
  };
  k.same("number of classes", s.size(), want.size());
  for (std::size_t i = 1; i < want.size() && i < s.size(); ++i) k.equal("s" + std::to_string(i), s[i], want[i]);
  r.passed = k.passed();
  r.detail = k.detail("s1..s15 exact, s15 = " + format_class(s.back(), c.d));
}

void headline(Context& c, CriterionResult& r) {
  Checker k(c.d);
  Integer y8 = degree_y8(c.segre(), c.d);
  k.same("deg Y8", y8, Integer("1047361761"));
  r.passed = k.passed();
  r.detail = k.detail("deg Y8 = " + y8.get_str());
}

void properties(Context& c, CriterionResult& r) {
  Checker k(c.d);
  const auto& d = c.d;
  const auto& f = c.engine().functionals();

  // Every reduced word of every node (up to the cap) gives the node's functional.
  std::size_t words = 0, pairs = 0;
  for (NodeId w = 0; w < d.size(); ++w) {
    auto ws = d.reduced_words(w, c.options.word_cap);
    words += ws.size();
    pairs += ws.size() * (ws.size() - 1) / 2;
    for (const auto& word : ws) {
      auto phi = word_functional(word);
      bool same = phi.size() == monomial_count(d.length(w));
      for (std::size_t i = 0; same && i < phi.size(); ++i) same = phi[i] == f.value(w, i);
      k.truth("reduced words of " + d.name(w) + " disagree", same);
    }
  }

  // Multiples of the W-invariant quadratic are killed at every node.
  std::mt19937_64 rng(c.options.seed);
  std::uniform_int_distribution<int> var(0, Poly::kVars - 1), coef(-5, 5);
  Poly q = to_fundamental(w_invariant_quadratic());
  std::size_t shifts = 0;
  for (NodeId w = 0; w < d.size(); ++w) {
    if (d.length(w) < 2) continue;
    for (int trial = 0; trial < 3; ++trial) {
      Poly h(Coordinates::kFundamental);
      for (int t = 0; t < 12; ++t) {
        Poly::Exponents e{};
        for (int j = 0; j < d.length(w) - 2; ++j) ++e[var(rng)];
        h.add_term(e, coef(rng));
      }
      ++shifts;
      k.truth("ideal element not annihilated at " + d.name(w), f.coefficient(w, q * h) == 0);
    }
  }
  auto reps = schubert_representatives(d);
  auto e = invariant_generators();
  Poly qe = w_invariant_quadratic();
  k.equal("shifted s4p", c.engine().expand(reps.s4p + qe * e.e2), c.expect({{"1", "s4p"}}));
  k.equal("shifted s8p", c.engine().expand(reps.s8p + qe * qe * e.e4), c.expect({{"1", "s8p"}}));
  k.equal("shifted s8pp", c.engine().expand(reps.s8pp + qe * e.e6), c.expect({{"1", "s8pp"}}));

  // Associativity of the table.
  std::size_t triples = 0;
  const auto& t = c.table();
  for (NodeId a = 0; a < d.size(); ++a) {
    for (NodeId b = 0; b < d.size(); ++b) {
      if (d.length(a) + d.length(b) > d.max_length()) continue;
      for (NodeId x = 0; x < d.size(); ++x) {
        if (d.length(a) + d.length(b) + d.length(x) > d.max_length()) continue;
        ++triples;
        ChowClass sx = ChowClass::basis(d.size(), x);
        ChowClass left = multiply(t.product(a, b), sx, t);
        ChowClass right = multiply(ChowClass::basis(d.size(), a), t.product(b, x), t);
        k.equal("(" + d.name(a) + "*" + d.name(b) + ")*" + d.name(x), left, right);
      }
    }
  }

  // Octonions.
  auto j = run_jordan_selftest(c.options.seed, c.options.samples);
  k.same("composition law", j.composition_passed, c.options.samples);
  k.same("rank-one cells", j.cell_passed, c.options.samples);
  k.truth("octonion property suite", j.passed());

  std::ostringstream os;
  os << words << " reduced words (" << pairs << " pairs, cap " << c.options.word_cap << "), " << shifts
     << " ideal shifts, " << triples << " associativity triples, " << j.composition_passed << "/"
     << j.composition_samples << " composition, " << j.cell_passed << "/" << j.cell_samples << " cell points";
  r.passed = k.passed();
  r.detail = k.detail(os.str());
}

}  // namespace

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
  Context ctx(options);
  using Fn = void (*)(Context&, CriterionResult&);
  const std::vector<std::pair<const char*, Fn>> criteria{
      {"diagram shape", diagram_shape},
      {"degrees", degrees},
      {"Pieri table", pieri},
      {"structure constants", structure_constants},
      {"Borel expansions", borel_expansions},
      {"two-engine agreement", two_engines},
      {"Chern classes of N", chern},
      {"Chern classes of the projected bundle", projected},
      {"Segre classes", segre},
      {"degree of Y8", headline},
      {"property suites", properties},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = criteria[i].first;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ctx, r);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << ": "
     << r.detail;
  return os.str();
}

}  // namespace cayley
