#include "cli.hpp"

#include "cayley/borel.hpp"
#include "cayley/bundles.hpp"
#include "cayley/chow_ring.hpp"
#include "cayley/jordan.hpp"
#include "cayley/minuscule.hpp"
#include "cayley/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <optional>
#include <sstream>

namespace cayley::cli {

namespace {

using nlohmann::json;

class State {
 public:
  const WeightDiagram& diagram() {
    if (!d_) d_.emplace(cayley_plane_diagram());
    return *d_;
  }
  const StructureTable& table() {
    if (!table_) table_.emplace(solve_structure_constants(diagram()));
    return *table_;
  }
  const BorelEngine& engine() {
    if (!engine_) engine_ = std::make_unique<BorelEngine>(table());
    return *engine_;
  }
  const ChernVector& normal() {
    if (!normal_) normal_.emplace(chern_normal(diagram()));
    return *normal_;
  }
  const ChernVector& projected() {
    if (!projected_) projected_.emplace(chern_projected(normal(), diagram()));
    return *projected_;
  }
  const std::vector<ChowClass>& segre() {
    if (!segre_) segre_.emplace(segre_classes(projected(), engine()));
    return *segre_;
  }

 private:
  std::optional<WeightDiagram> d_;
  std::optional<StructureTable> table_;
  std::unique_ptr<BorelEngine> engine_;
  std::optional<ChernVector> normal_, projected_;
  std::optional<std::vector<ChowClass>> segre_;
};

State& state() {
  static State s;
  return s;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (std::size_t i = 0; i < Weight::kDim; ++i) a.push_back(to_string(w[i]));
  return a;
}

json class_json(const ChowClass& c, const WeightDiagram& d) {
  json o = json::object();
  for (NodeId w : c.support()) o[d.name(w)] = to_string(c[w]);
  return o;
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string valid_names(const WeightDiagram& d) {
  std::string s;
  for (const auto& n : d.names()) s += (s.empty() ? "" : " ") + n;
  return s + " h";
}

// Throws with exit code kUnknownName.
struct UnknownName {
  std::string name;
};

NodeId lookup(const WeightDiagram& d, const std::string& name) {
  auto id = d.find_name(name);
  if (!id) throw UnknownName{name};
  return *id;
}

int cmd_roots(std::ostream& out) {
  RootSystem e6 = build_e6();
  json j;
  j["group"] = e6.name();
  j["coordinates"] = {"e1", "e2", "e3", "e4", "e5", "u"};
  json roots = json::array(), weights = json::array();
  for (int i = 1; i <= e6.rank(); ++i) {
    roots.push_back({{"index", i}, {"weight", weight_json(e6.simple_root(i))}});
    weights.push_back({{"index", i}, {"weight", weight_json(e6.fundamental_weight(i))}});
  }
  j["simple_roots"] = roots;
  j["fundamental_weights"] = weights;
  j["cartan"] = e6.cartan();
  j["longest_word"] = e6.longest_word();
  dump(out, j);
  return kOk;
}

int cmd_hasse(std::ostream& out, const std::string& space, const std::string& format) {
  const WeightDiagram spinor = space == "s10" ? spinor_diagram() : cayley_plane_diagram();
  const WeightDiagram& d = space == "s10" ? spinor : state().diagram();
  if (format == "dot") {
    out << "digraph " << (space == "s10" ? "S10" : "OP2") << " {\n  rankdir=TB;\n";
    for (NodeId id = 0; id < d.size(); ++id)
      out << "  " << d.dot_id(id) << " [label=\"" << d.name(id) << "\\n" << d.degree(id) << "\"];\n";
    for (NodeId id = 0; id < d.size(); ++id)
      for (const Edge& e : d.node(id).down)
        out << "  " << d.dot_id(id) << " -> " << d.dot_id(e.target) << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
  } else if (format == "json") {
    json nodes = json::array(), edges = json::array();
    for (NodeId id = 0; id < d.size(); ++id) {
      nodes.push_back({{"id", d.dot_id(id)},
                       {"name", d.name(id)},
                       {"weight", weight_json(d.node(id).weight)},
                       {"length", d.length(id)},
                       {"dimension", d.dimension(id)},
                       {"degree", d.degree(id)}});
      for (const Edge& e : d.node(id).down)
        edges.push_back({{"source", d.dot_id(id)}, {"target", d.dot_id(e.target)}, {"label", e.label}});
    }
    dump(out, {{"space", space}, {"dimension", d.max_length()}, {"nodes", nodes}, {"edges", edges}});
  } else {
    for (int k = 0; k <= d.max_length(); ++k) {
      out << "codim " << k << ":";
      for (NodeId id : d.level(k)) out << " " << d.name(id) << " [" << d.degree(id) << "]";
      out << '\n';
    }
    for (NodeId id = 0; id < d.size(); ++id)
      for (const Edge& e : d.node(id).down) out << d.name(id) << " -" << e.label << "-> " << d.name(e.target) << '\n';
  }
  return kOk;
}

int cmd_degrees(std::ostream& out, const std::string& format) {
  const auto& d = state().diagram();
  if (format == "json") {
    json j = json::object();
    for (NodeId id = 0; id < d.size(); ++id) j[d.name(id)] = d.degree(id);
    dump(out, j);
  } else {
    for (NodeId id = 0; id < d.size(); ++id) out << d.name(id) << ": " << d.degree(id) << '\n';
  }
  return kOk;
}

int cmd_multiply(std::ostream& out, std::ostream& err, const std::string& a, const std::string& b,
                 const std::string& engine, const std::string& format) {
  const auto& d = state().diagram();
  NodeId u = lookup(d, a), v = lookup(d, b);
  std::vector<std::pair<std::string, ChowClass>> results;
  if (engine == "solver" || engine == "both") results.emplace_back("solver", state().table().product(u, v));
  if (engine == "borel" || engine == "both") results.emplace_back("borel", state().engine().multiply(u, v));

  if (format == "json") {
    json r = json::object();
    for (const auto& [name, c] : results) r[name] = class_json(c, d);
    dump(out, {{"left", a}, {"right", b}, {"engine", engine}, {"products", r}});
  } else {
    for (const auto& [name, c] : results) {
      if (results.size() > 1) out << name << ": ";
      out << format_class(c, d) << '\n';
    }
  }
  if (results.size() == 2 && results[0].second != results[1].second) {
    err << "engines disagree on " << a << " * " << b << ": solver gives " << format_class(results[0].second, d)
        << ", borel gives " << format_class(results[1].second, d) << '\n';
    return kEngineMismatch;
  }
  return kOk;
}

int cmd_table(std::ostream& out) {
  const auto& d = state().diagram();
  const auto& t = state().table();
  json products = json::object();
  for (NodeId u = 0; u < d.size(); ++u) {
    json row = json::object();
    for (NodeId v = 0; v < d.size(); ++v) row[d.name(v)] = class_json(t.product(u, v), d);
    products[d.name(u)] = row;
  }
  dump(out, {{"names", d.names()}, {"products", products}});
  return kOk;
}

int cmd_invariants(std::ostream& out, const std::string& format) {
  const auto& d = state().diagram();
  auto e = invariant_generators();
  json j = json::object();
  for (int k : {2, 4, 5, 6, 8}) {
    ChowClass c = expand_invariant(e.e(k), d);
    if (format == "json")
      j["e" + std::to_string(k)] = class_json(c, d);
    else
      out << "e" << k << " = " << format_class(c, d) << '\n';
  }
  if (format == "json") dump(out, j);
  return kOk;
}

int print_sequence(std::ostream& out, const std::string& format, const std::string& kind, const std::string& prefix,
                   int rank, const std::vector<ChowClass>& classes) {
  const auto& d = state().diagram();
  if (format == "json") {
    json list = json::array();
    for (const auto& c : classes) list.push_back(class_json(c, d));
    json j{{"kind", kind}, {"classes", list}};
    if (rank >= 0) j["rank"] = rank;
    dump(out, j);
  } else {
    for (std::size_t k = 1; k < classes.size(); ++k) out << prefix << k << " = " << format_class(classes[k], d) << '\n';
  }
  return kOk;
}

int cmd_chern(std::ostream& out, bool projected, const std::string& format) {
  const ChernVector& c = projected ? state().projected() : state().normal();
  return print_sequence(out, format, projected ? "chern_projected" : "chern_normal", projected ? "cbar" : "c", c.rank,
                        c.classes);
}

int cmd_segre(std::ostream& out, const std::string& format) {
  return print_sequence(out, format, "segre_projected", "s_", -1, state().segre());
}

int cmd_deg_y8(std::ostream& out, const std::string& format) {
  Integer y8 = degree_y8(state().segre(), state().diagram());
  if (format == "json")
    dump(out, {{"deg_y8", y8.get_str()}});
  else
    out << y8.get_str() << '\n';
  return kOk;
}

int cmd_jordan(std::ostream& out, std::uint64_t seed, int samples, const std::string& format) {
  JordanSelftest r = run_jordan_selftest(seed, samples);
  const std::vector<std::tuple<const char*, int, int>> rows{
      {"composition", r.composition_passed, r.composition_samples},
      {"alternative", r.alternative_passed, r.alternative_samples},
      {"cells", r.cell_passed, r.cell_samples},
      {"jordan", r.jordan_passed, r.jordan_samples},
      {"image", r.image_passed, r.image_samples},
      {"nu2", r.nu2_passed, r.nu2_samples},
      {"infinity", r.infinity_agree, r.infinity_samples},
      {"infinity_literal", r.infinity_agree_literal, r.infinity_samples},
  };
  if (format == "json") {
    json checks = json::object();
    for (const auto& [name, passed, total] : rows) checks[name] = {{"passed", passed}, {"samples", total}};
    dump(out, {{"seed", seed}, {"passed", r.passed()}, {"checks", checks}});
  } else {
    out << "seed " << seed << '\n';
    for (const auto& [name, passed, total] : rows) out << name << ": " << passed << "/" << total << '\n';
    out << (r.passed() ? "ok" : "FAILED") << '\n';
  }
  return r.passed() ? kOk : kFailure;
}

int cmd_selftest(std::ostream& out, std::uint64_t seed, const std::string& format) {
  SelftestOptions o;
  o.seed = seed;
  auto results = run_selftest(o);
  bool ok = true;
  json list = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (format == "json")
      list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    else
      out << format_result(r) << '\n';
  }
  if (format == "json") dump(out, {{"passed", ok}, {"criteria", list}});
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow ring of the Cayley plane E6/P6"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* roots = app.add_subcommand("roots", "simple roots, fundamental weights and Cartan matrix (JSON)");

  std::string space = "op2";
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram with lengths and degrees");
  hasse->add_option("--space", space, "op2 or s10")->check(CLI::IsMember({"op2", "s10"}));
  add_format(hasse, {"text", "json", "dot"});

  auto* degrees = app.add_subcommand("degrees", "degrees of all Schubert classes");
  add_format(degrees, {"text", "json"});

  std::string left, right, engine = "solver";
  auto* multiply = app.add_subcommand("multiply", "product of two Schubert classes");
  multiply->add_option("left", left)->required();
  multiply->add_option("right", right)->required();
  multiply->add_option("--engine", engine, "solver, borel or both")->check(CLI::IsMember({"solver", "borel", "both"}));
  add_format(multiply, {"text", "json"});

  auto* table = app.add_subcommand("table", "full multiplication table (JSON)");

  auto* invariants = app.add_subcommand("invariants", "Schubert expansions of the invariants e2..e8");
  add_format(invariants, {"text", "json"});

  bool projected = false;
  auto* chern = app.add_subcommand("chern", "Chern classes of the normal bundle in P^26");
  chern->add_flag("--projected", projected, "classes of the quotient by O(1)");
  add_format(chern, {"text", "json"});

  auto* segre = app.add_subcommand("segre", "Segre classes of the projected normal bundle");
  add_format(segre, {"text", "json"});

  auto* deg_y8 = app.add_subcommand("deg-y8", "degree of the variety of reductions Y8");
  add_format(deg_y8, {"text", "json"});

  std::uint64_t seed = 1;
  int samples = 1000;
  auto* jordan = app.add_subcommand("jordan-selftest", "randomized octonion and Jordan algebra checks");
  jordan->add_option("--seed", seed);
  jordan->add_option("--samples", samples)->check(CLI::PositiveNumber);
  add_format(jordan, {"text", "json"});

  auto* selftest = app.add_subcommand("selftest", "full acceptance suite");
  selftest->add_option("--seed", seed);
  add_format(selftest, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kFailure;
  }

  try {
    if (roots->parsed()) return cmd_roots(out);
    if (hasse->parsed()) return cmd_hasse(out, space, format);
    if (degrees->parsed()) return cmd_degrees(out, format);
    if (multiply->parsed()) return cmd_multiply(out, err, left, right, engine, format);
    if (table->parsed()) return cmd_table(out);
    if (invariants->parsed()) return cmd_invariants(out, format);
    if (chern->parsed()) return cmd_chern(out, projected, format);
    if (segre->parsed()) return cmd_segre(out, format);
    if (deg_y8->parsed()) return cmd_deg_y8(out, format);
    if (jordan->parsed()) return cmd_jordan(out, seed, samples, format);
    if (selftest->parsed()) return cmd_selftest(out, seed, format);
  } catch (const UnknownName& e) {
    err << "unknown class name '" << e.name << "'; valid names: " << valid_names(state().diagram()) << '\n';
    return kUnknownName;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace cayley::cli
