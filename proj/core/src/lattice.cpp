#include "cayley/lattice.hpp"

#include "cayley/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

Weight Weight::unit(std::size_t i) {
  Weight w;
  w.c_.at(i) = 1;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.c_) x = -x;
  return w;
}

bool operator<(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < Weight::kDim; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

bool Weight::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i == kScaled) os << "; ";
    else if (i > 0) os << ',';
    os << cayley::to_string(c_[i]);
  }
  os << ')';
  return os.str();
}

std::size_t Weight::hash() const {
  std::size_t h = 0;
  for (const auto& x : c_) {
    const std::size_t v = std::hash<std::string>{}(x.get_str());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Rational inner(const Weight& x, const Weight& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < Weight::kScaled; ++i) s += x[i] * y[i];
  s += 3 * x[Weight::kScaled] * y[Weight::kScaled];
  return s;
}

RootSystem::RootSystem(std::string name, std::vector<Weight> simple_roots)
    : name_(std::move(name)), simple_(std::move(simple_roots)) {
  const std::size_t n = simple_.size();
  Matrix gram(n, n);
  cartan_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram(i, j) = inner(simple_[i], simple_[j]);
      if (!is_integer(gram(i, j)))
        throw std::invalid_argument("root system: non-integral Cartan entry");
      cartan_[i][j] = static_cast<int>(gram(i, j).get_num().get_si());
    }
  for (std::size_t i = 0; i < n; ++i)
    if (cartan_[i][i] != 2) throw std::invalid_argument("root system: roots must have norm 2");

  // ⟨ω_i, α_j⟩ = δ_ij with ω_i in the span of the roots: ω = C^{-1} α.
  const auto inv = inverse(gram);
  if (!inv) throw std::invalid_argument("root system: degenerate simple roots");
  for (std::size_t i = 0; i < n; ++i) {
    Weight w;
    for (std::size_t j = 0; j < n; ++j) w += (*inv)(i, j) * simple_[j];
    fundamental_.push_back(std::move(w));
  }
  for (const auto& w : fundamental_) rho_ += w;

  Weight v = rho_;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rank(); ++i) {
      if (sgn(inner(v, simple_root(i))) > 0) {
        v = reflect(i, v);
        longest_word_.push_back(i);
        moved = true;
        break;
      }
    }
  }
}

const Weight& RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index " + std::to_string(i));
  return simple_[static_cast<std::size_t>(i - 1)];
}

const Weight& RootSystem::fundamental_weight(int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("fundamental weight index " + std::to_string(i));
  return fundamental_[static_cast<std::size_t>(i - 1)];
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  const Weight& a = simple_root(i);
  return w - inner(w, a) * a;
}

Rational RootSystem::height(const Weight& w) const { return inner(rho_, w); }

Weight RootSystem::apply_longest(const Weight& w) const {
  Weight v = w;
  for (int i : longest_word_) v = reflect(i, v);
  return v;
}

namespace {

std::vector<Weight> e6_simple_roots() {
  const Rational h(1, 2);
  auto eps = [](std::size_t i) { return Weight::unit(i); };
  std::vector<Weight> roots = {
      eps(0) - eps(1),
      eps(1) - eps(2),
      eps(2) - eps(3),
      eps(3) - eps(4),
      eps(3) + eps(4),
  };
  Weight a6;
  for (std::size_t i = 0; i < 5; ++i) a6[i] = -h;
  a6[Weight::kScaled] = h;
  roots.push_back(a6);
  return roots;
}

}  // namespace

RootSystem build_e6() { return RootSystem("E6", e6_simple_roots()); }

RootSystem build_d5() {
  auto roots = e6_simple_roots();
  roots.pop_back();
  return RootSystem("D5", std::move(roots));
}

}  // namespace cayley
