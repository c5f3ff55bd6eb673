#include "cayley/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

constexpr int kBits = 8;
constexpr Poly::Key kMask = (Poly::Key{1} << kBits) - 1;

int key_degree(Poly::Key k) {
  int d = 0;
  for (int i = 0; i < Poly::kVars; ++i) d += static_cast<int>((k >> (kBits * i)) & kMask);
  return d;
}

int key_exponent(Poly::Key k, int i) { return static_cast<int>((k >> (kBits * i)) & kMask); }

bool graded_lex_greater(const Poly::Exponents& a, const Poly::Exponents& b) {
  int da = 0, db = 0;
  for (int i = 0; i < Poly::kVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Poly::Key Poly::pack(const Exponents& e) {
  Key k = 0;
  int deg = 0;
  for (int i = 0; i < kVars; ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    deg += e[i];
    k |= static_cast<Key>(e[i]) << (kBits * i);
  }
  if (deg > kMaxDegree) throw std::overflow_error("polynomial degree exceeds " + std::to_string(kMaxDegree));
  return k;
}

Poly::Exponents Poly::unpack(Key k) {
  Exponents e{};
  for (int i = 0; i < kVars; ++i) e[i] = key_exponent(k, i);
  return e;
}

Poly Poly::constant(const Rational& c, Coordinates coords) {
  Poly p(coords);
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(int i, Coordinates coords) {
  Exponents e{};
  e.at(i) = 1;
  return monomial(e, 1, coords);
}

Poly Poly::monomial(const Exponents& e, const Rational& c, Coordinates coords) {
  Poly p(coords);
  p.add_term(e, c);
  return p;
}

Poly Poly::linear(const std::array<Rational, kVars>& coeffs, Coordinates coords) {
  Poly p(coords);
  for (int i = 0; i < kVars; ++i) {
    Exponents e{};
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, key_degree(k));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int kd = key_degree(k);
    if (d >= 0 && kd != d) return false;
    d = kd;
  }
  return true;
}

std::vector<std::pair<Poly::Exponents, Rational>> Poly::terms() const {
  std::vector<std::pair<Exponents, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
  return out;
}

void Poly::add_term(const Exponents& e, const Rational& coefficient) {
  Rational c = coefficient;
  c.canonicalize();
  if (sgn(c) == 0) return;
  Key k = pack(e);
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (coords_ != o.coords_) throw std::invalid_argument("polynomials in different coordinate systems");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.coords_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.degree() + b.degree() > Poly::kMaxDegree)
    throw std::overflow_error("polynomial degree exceeds " + std::to_string(Poly::kMaxDegree));
  out.terms_.reserve(a.size() * b.size() / 4 + 16);
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = out.terms_.try_emplace(ka + kb, prod);
      if (!inserted) mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.coords_ == b.coords_ && a.terms_ == b.terms_; }

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly result = constant(1, coords_);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  static const char* eps[] = {"e1", "e2", "e3", "e4", "e5", "t"};
  static const char* fund[] = {"w1", "w2", "w3", "w4", "w5", "w6"};
  const char** names = coords_ == Coordinates::kEpsilon ? eps : fund;
  auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rational x = c;
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    x = abs(x);
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (constant) {
      os << cayley::to_string(x);
    } else {
      bool need_star = false;
      if (x != 1) {
        os << cayley::to_string(x);
        need_star = true;
      }
      for (int i = 0; i < kVars; ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
    }
    first = false;
  }
  return os.str();
}

Poly substitute_linear(const Poly& f, const LinearMap& images, Coordinates target) {
  std::array<std::vector<Poly>, Poly::kVars> powers;
  for (int j = 0; j < Poly::kVars; ++j) {
    powers[j].push_back(Poly::constant(1, target));
    powers[j].push_back(Poly::linear(images[j], target));
  }
  auto power = [&](int j, int e) -> const Poly& {
    while (static_cast<int>(powers[j].size()) <= e) powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][e];
  };
  // Group terms by their exponents outside the last variable to share work.
  std::map<Poly::Key, Poly> by_head;
  constexpr int last = Poly::kVars - 1;
  for (const auto& [k, c] : f.raw()) {
    Poly::Exponents e = Poly::unpack(k);
    int tail = e[last];
    e[last] = 0;
    auto [it, inserted] = by_head.try_emplace(Poly::pack(e), Poly(target));
    it->second += c * power(last, tail);
  }
  Poly out(target);
  for (const auto& [head, tail_poly] : by_head) {
    Poly::Exponents e = Poly::unpack(head);
    Poly term = tail_poly;
    for (int j = 0; j < last; ++j)
      if (e[j] > 0) term = term * power(j, e[j]);
    out += term;
  }
  return out;
}

Poly divide_exact(const Poly& f, const std::array<Rational, Poly::kVars>& form) {
  int pivot = -1;
  for (int i = 0; i < Poly::kVars; ++i) {
    if (sgn(form[i]) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) throw std::domain_error("division by the zero linear form");

  // Buckets by the exponent of the pivot variable, consumed from the top:
  // a term c·x_p^a·M contributes (c/ℓ_p)·x_p^(a-1)·M to the quotient and
  // pushes the rest of ℓ down to exponent a-1.
  int top = 0;
  for (const auto& [k, c] : f.raw()) top = std::max(top, key_exponent(k, pivot));
  std::vector<std::unordered_map<Poly::Key, Rational>> buckets(top + 1);
  for (const auto& [k, c] : f.raw()) buckets[key_exponent(k, pivot)].emplace(k, c);

  const Poly::Key unit = Poly::Key{1} << (kBits * pivot);
  std::vector<std::pair<Poly::Key, Rational>> others;
  for (int i = 0; i < Poly::kVars; ++i) {
    if (i == pivot || sgn(form[i]) == 0) continue;
    others.emplace_back(Poly::Key{1} << (kBits * i), form[i]);
  }
  const Rational inv = 1 / form[pivot];

  Poly q(f.coordinates());
  Rational t;
  for (int a = top; a >= 1; --a) {
    for (const auto& [k, c] : buckets[a]) {
      if (sgn(c) == 0) continue;
      Poly::Key base = k - unit;
      Rational qc = c * inv;
      for (const auto& [var, coeff] : others) {
        mpq_mul(t.get_mpq_t(), qc.get_mpq_t(), coeff.get_mpq_t());
        auto [it, inserted] = buckets[a - 1].try_emplace(base + var, -t);
        if (!inserted) mpq_sub(it->second.get_mpq_t(), it->second.get_mpq_t(), t.get_mpq_t());
      }
      q.add_term(Poly::unpack(base), qc);
    }
  }
  for (const auto& [k, c] : buckets[0])
    if (sgn(c) != 0) throw std::domain_error("inexact division: nonzero remainder");
  return q;
}

}  // namespace cayley
