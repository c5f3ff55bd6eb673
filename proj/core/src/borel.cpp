#include "cayley/borel.hpp"

#include "cayley/linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace cayley {

namespace {

const RootSystem& e6() {
  static const RootSystem rs = build_e6();
  return rs;
}

void check_index(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("simple reflection index " + std::to_string(i));
}

std::array<Rational, Poly::kVars> weight_coords(const Weight& w) {
  std::array<Rational, Poly::kVars> c;
  for (int j = 0; j < Poly::kVars; ++j) c[j] = w[j];
  return c;
}

LinearMap reflection_map(int i, Coordinates coords) {
  check_index(i);
  LinearMap m;
  if (coords == Coordinates::kEpsilon) {
    for (int j = 0; j < Poly::kVars; ++j) m[j] = weight_coords(e6().reflect(i, Weight::unit(j)));
  } else {
    const auto& cartan = e6().cartan();
    for (int j = 0; j < Poly::kVars; ++j) {
      m[j] = {};
      m[j][j] = 1;
    }
    for (int k = 0; k < Poly::kVars; ++k) m[i - 1][k] -= cartan[i - 1][k];
  }
  return m;
}

// P_{i,a} = Σ_{k<a} ω_i^k (s_i ω_i)^(a-1-k), integral in fundamental coordinates.
struct ClosedForm {
  std::vector<std::pair<Poly::Exponents, long>> terms;
};

const std::vector<std::vector<ClosedForm>>& closed_forms() {
  static const std::vector<std::vector<ClosedForm>> table = [] {
    std::vector<std::vector<ClosedForm>> t(7, std::vector<ClosedForm>(Poly::kMaxDegree + 1));
    for (int i = 1; i <= 6; ++i) {
      Poly x = Poly::variable(i - 1, Coordinates::kFundamental);
      Poly v = Poly::linear(reflection_map(i, Coordinates::kFundamental)[i - 1], Coordinates::kFundamental);
      std::vector<Poly> xp{Poly::constant(1, Coordinates::kFundamental)};
      std::vector<Poly> vp{Poly::constant(1, Coordinates::kFundamental)};
      for (int a = 1; a <= Poly::kMaxDegree; ++a) {
        xp.push_back(xp.back() * x);
        vp.push_back(vp.back() * v);
      }
      for (int a = 1; a <= Poly::kMaxDegree; ++a) {
        Poly p(Coordinates::kFundamental);
        for (int k = 0; k < a; ++k) p += xp[k] * vp[a - 1 - k];
        for (const auto& [e, c] : p.terms()) t[i][a].terms.emplace_back(e, to_integer(c).get_si());
      }
    }
    return t;
  }();
  return table;
}

// Compositions of s into r nonnegative parts.
std::size_t compositions(int s, int r) {
  static const auto table = [] {
    std::vector<std::vector<std::size_t>> c(2 * Poly::kMaxDegree + 2, std::vector<std::size_t>(Poly::kVars + 1));
    for (int s = 0; s < static_cast<int>(c.size()); ++s) {
      c[s][1] = 1;
      for (int r = 2; r <= Poly::kVars; ++r)
        for (int v = 0; v <= s; ++v) c[s][r] += c[s - v][r - 1];
    }
    return c;
  }();
  if (s < 0) return 0;
  return table.at(s).at(r);
}

// prefix[rem][r][e] = Σ_{v<e} compositions(rem - v, r)
const std::vector<std::vector<std::vector<std::size_t>>>& rank_prefix() {
  static const auto table = [] {
    std::vector<std::vector<std::vector<std::size_t>>> p(Poly::kMaxDegree + 1,
                                                         std::vector<std::vector<std::size_t>>(Poly::kVars));
    for (int rem = 0; rem <= Poly::kMaxDegree; ++rem)
      for (int r = 1; r < Poly::kVars; ++r) {
        p[rem][r].assign(rem + 2, 0);
        for (int e = 1; e <= rem + 1; ++e) p[rem][r][e] = p[rem][r][e - 1] + compositions(rem - (e - 1), r);
      }
    return p;
  }();
  return table;
}

const std::vector<Poly::Exponents>& monomials(int degree) {
  static const auto table = [] {
    std::vector<std::vector<Poly::Exponents>> t(Poly::kMaxDegree / 2 + 1);
    for (int k = 0; k < static_cast<int>(t.size()); ++k) {
      Poly::Exponents e{};
      auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == Poly::kVars - 1) {
          e[i] = rem;
          t[k].push_back(e);
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          e[i] = v;
          self(self, i + 1, rem - v);
        }
      };
      rec(rec, 0, k);
    }
    return t;
  }();
  return table.at(degree);
}

int exponent_sum(const Poly::Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

Poly fundamental(const Poly& f) {
  return f.coordinates() == Coordinates::kFundamental ? f : to_fundamental(f);
}

// ψ(m) = next(∂_label m) for every monomial m in `monos`, with `next` indexed
// by monomial_rank one degree lower.
std::vector<Integer> pull_back(const std::vector<Integer>& next, int label,
                               const std::vector<Poly::Exponents>& monos) {
  const auto& forms = closed_forms();
  std::vector<Integer> out(monos.size());
  const int var = label - 1;
  for (std::size_t r = 0; r < monos.size(); ++r) {
    Poly::Exponents m = monos[r];
    int a = m[var];
    if (a == 0) continue;
    m[var] = 0;
    mpz_ptr acc = out[r].get_mpz_t();
    for (const auto& [t, tc] : forms[label][a].terms) {
      Poly::Exponents target = m;
      for (int j = 0; j < Poly::kVars; ++j) target[j] += t[j];
      mpz_srcptr val = next[monomial_rank(target)].get_mpz_t();
      if (tc > 0)
        mpz_addmul_ui(acc, val, static_cast<unsigned long>(tc));
      else
        mpz_submul_ui(acc, val, static_cast<unsigned long>(-tc));
    }
  }
  return out;
}

}  // namespace

std::size_t monomial_count(int k) { return compositions(k, Poly::kVars); }

std::size_t monomial_rank(const Poly::Exponents& e) {
  const auto& prefix = rank_prefix();
  int rem = exponent_sum(e);
  std::size_t rank = 0;
  for (int i = 0; i < Poly::kVars - 1; ++i) {
    rank += prefix[rem][Poly::kVars - 1 - i][e[i]];
    rem -= e[i];
  }
  return rank;
}

Poly linear_form(const Weight& w) { return Poly::linear(weight_coords(w), Coordinates::kEpsilon); }

Poly simple_root_form(int i, Coordinates coords) {
  check_index(i);
  if (coords == Coordinates::kEpsilon) return linear_form(e6().simple_root(i));
  std::array<Rational, Poly::kVars> c;
  for (int k = 0; k < Poly::kVars; ++k) c[k] = e6().cartan()[i - 1][k];
  return Poly::linear(c, coords);
}

Poly reflect_poly(int i, const Poly& f) {
  return substitute_linear(f, reflection_map(i, f.coordinates()), f.coordinates());
}

Poly divided_diff(int i, const Poly& f) {
  Poly num = f - reflect_poly(i, f);
  if (num.is_zero()) return Poly(f.coordinates());
  std::array<Rational, Poly::kVars> root;
  Poly alpha = simple_root_form(i, f.coordinates());
  for (int k = 0; k < Poly::kVars; ++k) {
    Poly::Exponents e{};
    e[k] = 1;
    root[k] = alpha.coeff(e);
  }
  try {
    return divide_exact(num, root);
  } catch (const std::domain_error&) {
    throw BorelError("f - s" + std::to_string(i) + "(f) is not divisible by alpha" + std::to_string(i));
  }
}

Poly divided_diff_word(const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  if (kFirstLetterAppliedLast) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_diff(*it, g);
  } else {
    for (int i : word) g = divided_diff(i, g);
  }
  return g;
}

Poly divided_diff_fundamental(int i, const Poly& f) {
  check_index(i);
  if (f.coordinates() != Coordinates::kFundamental)
    throw std::invalid_argument("closed-form divided difference needs fundamental coordinates");
  const auto& forms = closed_forms()[i];
  std::unordered_map<Poly::Key, Rational> acc;
  for (const auto& [k, c] : f.raw()) {
    Poly::Exponents e = Poly::unpack(k);
    int a = e[i - 1];
    if (a == 0) continue;
    e[i - 1] = 0;
    for (const auto& [t, tc] : forms[a].terms) {
      Poly::Exponents m = e;
      for (int j = 0; j < Poly::kVars; ++j) m[j] += t[j];
      acc[Poly::pack(m)] += c * tc;
    }
  }
  Poly out(Coordinates::kFundamental);
  for (const auto& [k, c] : acc) out.add_term(Poly::unpack(k), c);
  return out;
}

Poly to_fundamental(const Poly& f) {
  if (f.coordinates() == Coordinates::kFundamental) return f;
  LinearMap m;
  for (int j = 0; j < Poly::kVars; ++j)
    for (int k = 0; k < Poly::kVars; ++k) m[j][k] = inner(Weight::unit(j), e6().simple_root(k + 1));
  return substitute_linear(f, m, Coordinates::kFundamental);
}

Poly InvariantGenerators::e(int k) const {
  switch (k) {
    case 0: return Poly::constant(1);
    case 2: return e2;
    case 4: return e4;
    case 5: return e5;
    case 6: return e6;
    case 8: return e8;
    case 10: return e5 * e5;
    default: throw std::out_of_range("no invariant generator e" + std::to_string(k));
  }
}

InvariantGenerators invariant_generators() {
  // Elementary symmetric functions of the squares via Π (1 + ε_j² z).
  std::vector<Poly> elem(6, Poly(Coordinates::kEpsilon));
  elem[0] = Poly::constant(1);
  for (int j = 0; j < 5; ++j) {
    Poly sq = Poly::variable(j) * Poly::variable(j);
    for (int k = 5; k >= 1; --k) elem[k] += elem[k - 1] * sq;
  }
  Poly e5 = Poly::constant(1);
  for (int j = 0; j < 5; ++j) e5 = e5 * Poly::variable(j);
  return {elem[1], elem[2], e5, elem[3], elem[4]};
}

Poly w_invariant_quadratic() {
  Poly q(Coordinates::kEpsilon);
  for (int j = 0; j < 5; ++j) q += Poly::variable(j) * Poly::variable(j);
  q += Rational(1, 3) * Poly::variable(5) * Poly::variable(5);
  return q;
}

bool is_w0_invariant(const Poly& f) {
  for (int j = 1; j <= 5; ++j)
    if (reflect_poly(j, f) != f) return false;
  return true;
}

ChowClass expand_invariant(const Poly& f, const WeightDiagram& d) {
  ChowClass out(d.size());
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) throw std::invalid_argument("expand_invariant: polynomial is not homogeneous");
  int k = f.degree();
  if (k > d.max_length()) throw std::invalid_argument("expand_invariant: degree exceeds the dimension");
  if (!is_w0_invariant(f)) throw std::invalid_argument("expand_invariant: polynomial is not W0-invariant");

  std::vector<std::optional<Poly>> g(d.size());
  g[d.top()] = fundamental(f);
  for (int level = 1; level <= k; ++level) {
    for (NodeId v : d.level(level)) {
      const Edge& up = d.node(v).up.front();
      g[v] = divided_diff(up.label, *g[up.target]);
    }
  }
  for (NodeId w : d.level(k)) {
    if (g[w]->degree() > 0) throw BorelError("full-length divided difference is not constant");
    out[w] = g[w]->constant_term();
  }
  return out;
}

namespace {

std::vector<Poly> solve_for_classes(const std::vector<Poly>& candidates, const std::vector<NodeId>& targets,
                                    const WeightDiagram& d) {
  std::vector<ChowClass> expansions;
  for (const auto& c : candidates) expansions.push_back(expand_invariant(c, d));
  Matrix a(targets.size(), candidates.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = 0; j < candidates.size(); ++j) a(i, j) = expansions[j][targets[i]];
  std::vector<Poly> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    std::vector<Rational> rhs(targets.size());
    rhs[t] = 1;
    auto x = solve(a, rhs);
    if (!x) throw BorelError("no invariant representative for " + d.name(targets[t]));
    Poly p(Coordinates::kEpsilon);
    for (std::size_t j = 0; j < candidates.size(); ++j) p += (*x)[j] * candidates[j];
    out.push_back(std::move(p));
  }
  return out;
}

NodeId named(const WeightDiagram& d, const char* name) {
  auto id = d.find_name(name);
  if (!id) throw BorelError(std::string("diagram has no class named ") + name);
  return *id;
}

}  // namespace

SchubertRepresentatives schubert_representatives(const WeightDiagram& d) {
  InvariantGenerators e = invariant_generators();
  // H is the class of ω6 = (2/3)T.
  Poly h = linear_form(e6().fundamental_weight(6));
  if (expand_invariant(h, d) != ChowClass::basis(d.size(), named(d, "s1")))
    throw BorelError("the linear form of the highest weight does not expand to the hyperplane class");

  Poly h2 = h * h, h3 = h2 * h, h4 = h2 * h2;
  auto deg4 = solve_for_classes({h4, e.e4}, {named(d, "s4p"), named(d, "s4pp")}, d);
  auto deg8 = solve_for_classes({h4 * h4, e.e4 * h4, e.e4 * e.e4, e.e8, e.e6 * h2, e.e5 * h3},
                                {named(d, "s8"), named(d, "s8p"), named(d, "s8pp")}, d);
  return {h, deg4[0], deg4[1], deg8[0], deg8[1], deg8[2]};
}

CoefficientFunctionals::CoefficientFunctionals(const WeightDiagram& d, std::size_t word_cap)
    : nodes_(d.size()), length_(d.size()), levels_(d.max_length() + 1), top_(d.size()) {
  for (NodeId id = 0; id < d.size(); ++id) length_[id] = d.length(id);
  for (int k = 0; k <= d.max_length(); ++k) levels_[k] = d.level(k);
  if (d.root_system().rank() != Poly::kVars) throw BorelError("functionals need a rank-6 root system");

  std::vector<std::vector<Poly::Exponents>> basis(d.max_length() + 1);
  for (int k = 0; k <= d.max_length(); ++k) basis[k] = monomials(k);

  report_.nodes = d.size();
  for (NodeId w = 0; w < d.size(); ++w) {
    std::uint64_t words = std::min<std::uint64_t>(d.path_count(d.top(), w), word_cap);
    report_.word_pairs += words * (words - 1) / 2;

    std::vector<std::vector<Integer>> psi(d.size());
    psi[w] = {Integer(1)};
    for (int len = 1; len <= d.length(w); ++len) {
      const auto& monos = basis[len];
      for (NodeId u : d.level(d.length(w) - len)) {
        if (d.path_count(u, w) == 0) continue;
        ++report_.segments;
        std::optional<std::vector<Integer>> first;
        for (const Edge& e : d.node(u).down) {
          const auto& next = psi[e.target];
          if (next.empty()) continue;
          std::vector<Integer> cand = pull_back(next, e.label, monos);
          report_.monomials += monos.size();
          if (!first) {
            first = std::move(cand);
          } else {
            ++report_.edge_comparisons;
            if (*first != cand) {
              std::ostringstream os;
              os << "chains from " << d.name(u) << " to " << d.name(w) << " give different functionals";
              throw BorelError(os.str());
            }
          }
        }
        psi[u] = std::move(*first);
      }
    }
    top_[w] = std::move(psi[d.top()]);
  }
}

std::vector<Integer> word_functional(const std::vector<int>& word) {
  for (int i : word) check_index(i);
  std::vector<Integer> psi{Integer(1)};
  const int k = static_cast<int>(word.size());
  for (int j = 1; j <= k; ++j) {
    // The operator that lowers degree j to j - 1.
    int letter = kFirstLetterAppliedLast ? word[j - 1] : word[k - j];
    psi = pull_back(psi, letter, monomials(j));
  }
  return psi;
}

Rational CoefficientFunctionals::coefficient(NodeId w, const Poly& f) const {
  if (f.coordinates() != Coordinates::kFundamental)
    throw std::invalid_argument("coefficient functionals take fundamental coordinates");
  Rational sum = 0;
  for (const auto& [k, c] : f.raw()) {
    Poly::Exponents e = Poly::unpack(k);
    if (exponent_sum(e) != length_.at(w)) throw std::invalid_argument("degree does not match the node length");
    sum += c * top_[w][monomial_rank(e)];
  }
  return sum;
}

ChowClass CoefficientFunctionals::expand(const Poly& f) const { return expand_shifted(f, 0); }

ChowClass CoefficientFunctionals::expand_shifted(const Poly& f, int shift) const {
  if (f.coordinates() != Coordinates::kFundamental)
    throw std::invalid_argument("coefficient functionals take fundamental coordinates");
  ChowClass out(nodes_);
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) throw std::invalid_argument("expansion of an inhomogeneous polynomial");
  int k = f.degree() + shift;
  if (k >= static_cast<int>(levels_.size())) throw std::invalid_argument("degree exceeds the dimension");
  const auto& level = levels_[k];
  std::vector<Rational> acc(level.size());
  Rational t;
  for (const auto& [key, c] : f.raw()) {
    Poly::Exponents e = Poly::unpack(key);
    e[Poly::kVars - 1] += shift;
    std::size_t r = monomial_rank(e);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Integer& v = top_[level[i]][r];
      if (sgn(v) == 0) continue;
      mpq_set_z(t.get_mpq_t(), v.get_mpz_t());
      acc[i] += c * t;
    }
  }
  for (std::size_t i = 0; i < level.size(); ++i) out[level[i]] = acc[i];
  return out;
}

BorelEngine::BorelEngine(const StructureTable& t)
    : d_(t.diagram()), functionals_(d_), reps_(schubert_representatives(d_)) {
  generation_.reserve(d_.size());
  for (NodeId u = 0; u < d_.size(); ++u) generation_.push_back(t.generation(u));

  Poly rh = to_fundamental(reps_.h);
  if (rh != Poly::variable(5, Coordinates::kFundamental))
    throw BorelError("hyperplane representative is not w6 in fundamental coordinates");
  Poly r4 = to_fundamental(reps_.s4p);
  Poly r8 = to_fundamental(reps_.s8);
  if (functionals_.expand(r4) != ChowClass::basis(d_.size(), named(d_, "s4p")) ||
      functionals_.expand(r8) != ChowClass::basis(d_.size(), named(d_, "s8")))
    throw BorelError("functional and literal expansions of the representatives disagree");

  const int dim = d_.max_length();
  std::vector<Poly> r4_powers{Poly::constant(1, Coordinates::kFundamental)};
  while (4 * static_cast<int>(r4_powers.size()) <= dim) r4_powers.push_back(r4_powers.back() * r4);
  for (int c = 0; 8 * c <= dim; ++c) {
    Poly r8c = Poly::constant(1, Coordinates::kFundamental);
    for (int i = 0; i < c; ++i) r8c = r8c * r8;
    for (int b = 0; 8 * c + 4 * b <= dim; ++b) {
      Poly p = b == 0 ? r8c : (c == 0 ? r4_powers[b] : r4_powers[b] * r8c);
      for (int a = 0; a + 4 * b + 8 * c <= dim; ++a)
        monomial_expansions_.emplace(GenMonomial{a, b, c}, functionals_.expand_shifted(p, a));
      powers_.emplace(std::make_pair(b, c), std::move(p));
    }
  }

  for (NodeId u = 0; u < d_.size(); ++u) {
    ChowClass sum(d_.size());
    for (const auto& [m, x] : generation_[u]) sum += x * monomial_expansions_.at(m);
    if (sum != ChowClass::basis(d_.size(), u))
      throw BorelError("representative of " + d_.name(u) + " expands to " + format_class(sum, d_));
  }
}

ChowClass BorelEngine::expand(const Poly& f) const {
  if (!f.is_homogeneous()) throw std::invalid_argument("expand: polynomial is not homogeneous");
  if (f.degree() > d_.max_length()) throw std::invalid_argument("expand: degree exceeds the dimension");
  if (!is_w0_invariant(f)) throw std::invalid_argument("expand: polynomial is not W0-invariant");
  return functionals_.expand(fundamental(f));
}

Poly BorelEngine::representative(NodeId u) const {
  Poly out(Coordinates::kFundamental);
  for (const auto& [m, x] : generation_.at(u)) {
    Poly::Exponents shift{};
    shift[Poly::kVars - 1] = m.h;
    out += x * (Poly::monomial(shift, 1, Coordinates::kFundamental) * powers_.at({m.s4, m.s8}));
  }
  return out;
}

ChowClass BorelEngine::multiply(NodeId u, NodeId v) const {
  ChowClass out(d_.size());
  if (d_.length(u) + d_.length(v) > d_.max_length()) return out;
  for (const auto& [mu, xu] : generation_.at(u))
    for (const auto& [mv, xv] : generation_.at(v)) out += (xu * xv) * monomial_expansions_.at(mu + mv);
  return out;
}

ChowClass BorelEngine::multiply(const ChowClass& a, const ChowClass& b) const {
  ChowClass out(d_.size());
  for (NodeId u : a.support())
    for (NodeId v : b.support()) out += (a[u] * b[v]) * multiply(u, v);
  return out;
}

ChowClass BorelEngine::multiply_direct(NodeId u, NodeId v) const {
  if (d_.length(u) + d_.length(v) > d_.max_length()) return ChowClass(d_.size());
  return functionals_.expand(representative(u) * representative(v));
}

}  // namespace cayley
