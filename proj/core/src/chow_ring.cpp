#include "cayley/chow_ring.hpp"

#include "cayley/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace cayley {

ChowClass ChowClass::basis(std::size_t nodes, NodeId id, const Rational& coeff) {
  ChowClass c(nodes);
  c[id] = coeff;
  return c;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  if (c_.empty()) c_.resize(o.size());
  if (o.size() != size()) throw std::invalid_argument("ChowClass size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  if (c_.empty()) c_.resize(o.size());
  if (o.size() != size()) throw std::invalid_argument("ChowClass size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool ChowClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<NodeId> ChowClass::support() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) out.push_back(i);
  return out;
}

std::optional<int> ChowClass::grade(const WeightDiagram& d) const {
  std::optional<int> g;
  for (NodeId i : support()) {
    if (g && *g != d.length(i)) return std::nullopt;
    g = d.length(i);
  }
  return g;
}

bool ChowClass::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
}

std::string format_class(const ChowClass& c, const WeightDiagram& d) {
  std::ostringstream os;
  bool first = true;
  auto support = c.support();
  std::sort(support.begin(), support.end(), [&](NodeId a, NodeId b) {
    if (d.length(a) != d.length(b)) return d.length(a) < d.length(b);
    return d.name(a) < d.name(b);
  });
  for (NodeId i : support) {
    Rational x = c[i];
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    x = abs(x);
    if (x != 1) os << to_string(x) << "*";
    os << d.name(i);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

ChowClass pieri_hk(const WeightDiagram& d, NodeId w, int k) {
  ChowClass out(d.size());
  if (k < 0) throw std::invalid_argument("negative hyperplane power");
  int target = d.length(w) + k;
  if (target > d.max_length()) return out;
  for (NodeId v : d.level(target)) out[v] = Rational(Integer(std::to_string(d.path_count(w, v))));
  return out;
}

ChowClass pieri_hk(const WeightDiagram& d, const ChowClass& c, int k) {
  ChowClass out(d.size());
  for (NodeId w : c.support()) out += c[w] * pieri_hk(d, w, k);
  return out;
}

std::uint64_t schubert_degree(const WeightDiagram& d, NodeId w) { return d.degree(w); }

Rational degree(const WeightDiagram& d, const ChowClass& c) {
  Rational sum = 0;
  for (NodeId w : c.support()) sum += c[w] * Rational(Integer(std::to_string(d.degree(w))));
  return sum;
}

Rational poincare_pairing(const WeightDiagram& d, const ChowClass& a, const ChowClass& b) {
  auto ga = a.grade(d);
  auto gb = b.grade(d);
  if ((!ga && !a.is_zero()) || (!gb && !b.is_zero()))
    throw std::invalid_argument("pairing of inhomogeneous classes");
  if (ga && gb && *ga + *gb != d.max_length())
    throw std::invalid_argument("pairing grades " + std::to_string(*ga) + " + " + std::to_string(*gb) +
                                " do not sum to " + std::to_string(d.max_length()));
  Rational sum = 0;
  for (NodeId w : a.support()) sum += a[w] * b[d.dual(w)];
  return sum;
}

std::string format_gen_poly(const GenPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [m, coeff] = *it;
    if (sgn(coeff) == 0) continue;
    Rational x = coeff;
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    x = abs(x);
    std::vector<std::string> factors;
    auto power = [&](const char* g, int e) {
      if (e == 1) factors.push_back(g);
      if (e > 1) factors.push_back(std::string(g) + "^" + std::to_string(e));
    };
    power("h", m.h);
    power("s4p", m.s4);
    power("s8", m.s8);
    if (factors.empty()) {
      os << to_string(x);
    } else {
      if (x != 1) os << to_string(x) << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

const Rational& StructureTable::integral(const GenMonomial& m) const {
  auto it = integrals_.find(m);
  if (it == integrals_.end())
    throw std::invalid_argument("no top-degree integral for monomial of degree " + std::to_string(m.degree()));
  return it->second;
}

namespace {

NodeId require(const WeightDiagram& d, const std::string& name) {
  auto id = d.find_name(name);
  if (!id) throw SolverError("diagram has no class named " + name);
  return *id;
}

// Monomials in H, σ4', σ8 of a given degree, most σ8 first, then most σ4'.
std::vector<GenMonomial> monomials_of_degree(int k) {
  std::vector<GenMonomial> out;
  for (int c = k / 8; c >= 0; --c)
    for (int b = (k - 8 * c) / 4; b >= 0; --b) out.push_back({k - 8 * c - 4 * b, b, c});
  return out;
}

std::array<Integer, 3> coefficients(const ChowClass& c, const std::array<NodeId, 3>& basis) {
  std::array<Integer, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = to_integer(c[basis[i]]);
  return out;
}

}  // namespace

namespace detail {

class Solver {
 public:
  Solver(const WeightDiagram& d, const GeometricAxioms& axioms) : d_(d), axioms_(axioms) {}

  StructureTable build();

 private:
  StructureTable run(StructureTable t);
  ChowClass axiom_product(NodeId u, NodeId v) const;
  void resolve_quartic(QuarticResolution& r);
  ChowClass expand_low(const GenMonomial& m) const;
  Rational integrate(const GenMonomial& m);
  void represent_level(int k, std::vector<GenPoly>& reps);
  Rational integrate(const GenPoly& a, const GenPoly& b, const GenPoly& c);

  const WeightDiagram& d_;
  const GeometricAxioms& axioms_;
  NodeId s4p_ = 0, s4pp_ = 0, s8_ = 0;
  std::array<NodeId, 3> b8_{};
  ChowClass s4p_squared_;
  std::map<GenMonomial, Rational> integrals_;
};

ChowClass Solver::axiom_product(NodeId u, NodeId v) const {
  for (const auto& ax : axioms_.products) {
    NodeId l = require(d_, ax.left);
    NodeId r = require(d_, ax.right);
    if ((l == u && r == v) || (l == v && r == u)) return ChowClass::basis(d_.size(), require(d_, ax.result));
  }
  throw SolverError("no axiom for the product " + d_.name(u) + "*" + d_.name(v));
}

void Solver::resolve_quartic(QuarticResolution& r) {
  ChowClass h4 = pieri_hk(d_, d_.top(), 4);
  if (h4 != ChowClass::basis(d_.size(), s4p_) + ChowClass::basis(d_.size(), s4pp_))
    throw SolverError("H^4 is not s4p + s4pp: " + format_class(h4, d_));
  for (NodeId b : b8_)
    if (d_.dual(b) != b) throw SolverError("codimension-8 class " + d_.name(b) + " is not self-dual");

  r.pieri_s4p = coefficients(pieri_hk(d_, s4p_, 4), b8_);
  r.pieri_s4pp = coefficients(pieri_hk(d_, s4pp_, 4), b8_);

  // The s8 coefficient of a codimension-8 class X is ∫ X·s8, and
  // ∫ s4·s4·s8 = ∫ s4·(s4·s8) is fixed by the axioms and duality.
  r.mu[0] = to_integer(poincare_pairing(d_, ChowClass::basis(d_.size(), s4p_), axiom_product(s4p_, s8_)));
  r.nu[0] = to_integer(poincare_pairing(d_, ChowClass::basis(d_.size(), s4pp_), axiom_product(s4pp_, s8_)));

  // H^4 = s4p + s4pp turns the Pieri rows into μ + γ = p and ν + γ = q.
  r.gamma[0] = r.pieri_s4p[0] - r.mu[0];
  if (r.nu[0] + r.gamma[0] != r.pieri_s4pp[0])
    throw SolverError("inconsistent s8 coefficients: nu0 + gamma0 = " + to_string(Integer(r.nu[0] + r.gamma[0])) +
                      ", Pieri gives " + to_string(r.pieri_s4pp[0]));

  // (s4p)^2 (s4pp)^2 = (s4p s4pp)^2 with self-dual codimension 8:
  // Σ μ_i ν_i = Σ γ_i^2, linear in γ1, γ2 after substituting μ, ν.
  const auto& p = r.pieri_s4p;
  const auto& q = r.pieri_s4pp;
  r.a1 = p[1] + q[1];
  r.a2 = p[2] + q[2];
  r.c = r.mu[0] * r.nu[0] + p[1] * q[1] + p[2] * q[2] - r.gamma[0] * r.gamma[0];

  r.line_points.clear();
  r.admissible.clear();
  if (sgn(r.a1) <= 0 || sgn(r.a2) <= 0 || sgn(r.c) < 0)
    throw SolverError("degenerate quartic line " + to_string(r.a1) + "*g1 + " + to_string(r.a2) +
                      "*g2 = " + to_string(r.c));
  for (Integer g1 = 0; g1 * r.a1 <= r.c; ++g1) {
    Integer rest = r.c - g1 * r.a1;
    if (rest % r.a2 != 0) continue;
    Integer g2 = rest / r.a2;
    r.line_points.push_back({g1, g2});
    if (g1 <= p[1] && g1 <= q[1] && g2 <= p[2] && g2 <= q[2]) r.admissible.push_back({g1, g2});
  }
  if (r.admissible.size() != 1) {
    std::ostringstream os;
    os << r.admissible.size() << " admissible solutions on " << r.a1 << "*g1 + " << r.a2 << "*g2 = " << r.c
       << " among " << r.line_points.size() << " nonnegative integer points";
    throw SolverError(os.str());
  }
  r.gamma[1] = r.admissible[0][0];
  r.gamma[2] = r.admissible[0][1];
  for (int i = 1; i < 3; ++i) {
    r.mu[i] = p[i] - r.gamma[i];
    r.nu[i] = q[i] - r.gamma[i];
  }
  Integer lhs = 0, rhs = 0;
  for (int i = 0; i < 3; ++i) {
    lhs += r.mu[i] * r.nu[i];
    rhs += r.gamma[i] * r.gamma[i];
  }
  if (lhs != rhs) throw SolverError("quartic identity residual " + to_string(Integer(lhs - rhs)));

  s4p_squared_ = ChowClass(d_.size());
  for (int i = 0; i < 3; ++i) s4p_squared_[b8_[i]] = r.mu[i];
}

// Schubert expansion of a monomial of degree at most 8.
ChowClass Solver::expand_low(const GenMonomial& m) const {
  if (m.degree() > 8) throw SolverError("expand_low beyond degree 8");
  if (m.s8 == 1) return pieri_hk(d_, s8_, m.h);
  if (m.s4 == 2) return pieri_hk(d_, s4p_squared_, m.h);
  if (m.s4 == 1) return pieri_hk(d_, s4p_, m.h);
  return pieri_hk(d_, d_.top(), m.h);
}

// ∫ of a degree-16 monomial, splitting it into two halves of degree 8;
// every split must give the same value.
Rational Solver::integrate(const GenMonomial& m) {
  if (m.degree() != d_.max_length()) return 0;
  if (auto it = integrals_.find(m); it != integrals_.end()) return it->second;
  std::optional<Rational> value;
  for (const auto& left : monomials_of_degree(8)) {
    if (left.h > m.h || left.s4 > m.s4 || left.s8 > m.s8) continue;
    GenMonomial right{m.h - left.h, m.s4 - left.s4, m.s8 - left.s8};
    Rational v = poincare_pairing(d_, expand_low(left), expand_low(right));
    if (value && *value != v)
      throw SolverError("monomial integral depends on the split: " + to_string(*value) + " vs " + to_string(v));
    value = v;
  }
  if (!value) throw SolverError("no degree-8 split for a top-degree monomial");
  integrals_[m] = *value;
  return *value;
}

Rational Solver::integrate(const GenPoly& a, const GenPoly& b, const GenPoly& c) {
  Rational sum = 0;
  for (const auto& [ma, xa] : a)
    for (const auto& [mb, xb] : b)
      for (const auto& [mc, xc] : c) sum += xa * xb * xc * integrate(ma + mb + mc);
  return sum;
}

// Writes every class of codimension k as a polynomial in the generators.
// Up to codimension 8 the monomials are expanded directly; above, a class
// is determined by its pairings against the (already known) classes of the
// complementary codimension.
void Solver::represent_level(int k, std::vector<GenPoly>& reps) {
  const auto& level = d_.level(k);
  auto monomials = monomials_of_degree(k);
  Matrix a(level.size(), monomials.size());
  if (k <= 8) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      ChowClass e = expand_low(monomials[j]);
      for (std::size_t i = 0; i < level.size(); ++i) a(i, j) = e[level[i]];
    }
  } else {
    const auto& co = d_.level(d_.max_length() - k);
    for (std::size_t i = 0; i < co.size(); ++i) {
      for (std::size_t j = 0; j < monomials.size(); ++j) {
        Rational sum = 0;
        for (const auto& [m, x] : reps[co[i]]) sum += x * integrate(m + monomials[j]);
        a(i, j) = sum;
      }
    }
  }
  for (std::size_t t = 0; t < level.size(); ++t) {
    std::vector<Rational> rhs(level.size());
    if (k <= 8) {
      rhs[t] = 1;
    } else {
      const auto& co = d_.level(d_.max_length() - k);
      for (std::size_t i = 0; i < co.size(); ++i) rhs[i] = (d_.dual(level[t]) == co[i]) ? 1 : 0;
    }
    auto x = solve(a, rhs);
    if (!x) throw SolverError("class " + d_.name(level[t]) + " is not a polynomial in h, s4p, s8");
    GenPoly p;
    for (std::size_t j = 0; j < monomials.size(); ++j)
      if (sgn((*x)[j]) != 0) p[monomials[j]] = (*x)[j];
    reps[level[t]] = std::move(p);
  }
}

StructureTable Solver::run(StructureTable t) {
  s4p_ = require(d_, "s4p");
  s4pp_ = require(d_, "s4pp");
  s8_ = require(d_, "s8");
  b8_ = {s8_, require(d_, "s8p"), require(d_, "s8pp")};

  resolve_quartic(t.resolution_);

  const std::size_t n = d_.size();
  std::vector<GenPoly> reps(n);
  for (int k = 0; k <= d_.max_length(); ++k) represent_level(k, reps);

  t.table_.assign(n, std::vector<ChowClass>(n, ChowClass(n)));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u; v < n; ++v) {
      int k = d_.length(u) + d_.length(v);
      if (k > d_.max_length()) continue;
      ChowClass c(n);
      for (NodeId w : d_.level(k)) {
        c[w] = integrate(reps[u], reps[v], reps[d_.dual(w)]);
        if (!is_integer(c[w]) || sgn(c[w]) < 0)
          throw SolverError("coefficient of " + d_.name(w) + " in " + d_.name(u) + "*" + d_.name(v) + " is " +
                            to_string(c[w]));
      }
      t.table_[u][v] = c;
      t.table_[v][u] = std::move(c);
    }
  }

  for (const auto& ax : axioms_.products) {
    NodeId l = require(d_, ax.left), r = require(d_, ax.right);
    if (t.table_[l][r] != ChowClass::basis(n, require(d_, ax.result)))
      throw SolverError("completed table violates " + ax.left + "*" + ax.right + " = " + ax.result);
  }
  for (NodeId u = 0; u < n; ++u) {
    if (t.table_[u][require(d_, "s1")] != pieri_hk(d_, u, 1))
      throw SolverError("completed table violates Chevalley's formula at " + d_.name(u));
  }

  t.generation_ = std::move(reps);
  t.integrals_ = std::move(integrals_);
  return t;
}

StructureTable Solver::build() { return run(StructureTable(d_)); }

}  // namespace detail

StructureTable solve_structure_constants(const WeightDiagram& d, const GeometricAxioms& axioms) {
  detail::Solver solver(d, axioms);
  return solver.build();
}

ChowClass multiply(const ChowClass& a, const ChowClass& b, const StructureTable& t, bool* grade_overflow) {
  const auto& d = t.diagram();
  if (grade_overflow) *grade_overflow = false;
  ChowClass out(d.size());
  for (NodeId u : a.support()) {
    for (NodeId v : b.support()) {
      if (d.length(u) + d.length(v) > d.max_length()) {
        if (grade_overflow) *grade_overflow = true;
        continue;
      }
      out += (a[u] * b[v]) * t.product(u, v);
    }
  }
  return out;
}

Rational pairing(const ChowClass& a, const ChowClass& b, const StructureTable& t) {
  const auto& d = t.diagram();
  auto ga = a.grade(d);
  auto gb = b.grade(d);
  if (!ga || !gb || *ga + *gb != d.max_length())
    throw std::invalid_argument("pairing requires homogeneous classes of complementary grades");
  return multiply(a, b, t)[d.bottom()];
}

}  // namespace cayley
