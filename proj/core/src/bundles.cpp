#include "cayley/bundles.hpp"

namespace cayley {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void require_integral(const ChowClass& c, const WeightDiagram& d, const std::string& what) {
  if (!c.is_integral()) throw BundleError(what + " has non-integral coefficients: " + format_class(c, d));
}

}  // namespace

ChernVector chern_normal(const WeightDiagram& d) {
  constexpr int kRank = 10;
  InvariantGenerators e = invariant_generators();
  ChernVector out{kRank, std::vector<ChowClass>(kRank + 1, ChowClass(d.size()))};
  for (int i = 0; 2 * i <= kRank; ++i) {
    ChowClass ei = expand_invariant(e.e(2 * i), d);
    Rational sign = (i % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= kRank - 2 * i; ++j) {
      Rational scale = sign * Rational(binomial(kRank - 2 * i, j));
      Rational three_halves(3, 2);
      for (int p = 0; p < j; ++p) scale *= three_halves;
      out.classes[2 * i + j] += scale * pieri_hk(d, ei, j);
    }
  }
  for (int k = 0; k <= kRank; ++k) require_integral(out.classes[k], d, "c" + std::to_string(k) + "(N)");
  return out;
}

ChernVector chern_projected(const ChernVector& normal, const WeightDiagram& d) {
  ChernVector out{normal.rank - 1, {}};
  out.classes.push_back(normal.classes.at(0));
  for (int k = 1; k <= normal.rank; ++k) out.classes.push_back(normal.classes[k] - pieri_hk(d, out.classes[k - 1], 1));
  if (!out.classes.back().is_zero())
    throw BundleError("top Chern class of the rank-" + std::to_string(out.rank) +
                      " quotient does not vanish: " + format_class(out.classes.back(), d));
  out.classes.pop_back();
  for (std::size_t k = 0; k < out.classes.size(); ++k)
    require_integral(out.classes[k], d, "c" + std::to_string(k) + "(N/O(1))");
  return out;
}

std::vector<ChowClass> segre_classes(const ChernVector& c, const BorelEngine& engine) {
  const auto& d = engine.diagram();
  std::vector<ChowClass> s{ChowClass::basis(d.size(), d.top())};
  for (int k = 1; k < d.max_length(); ++k) {
    ChowClass sk(d.size());
    for (int i = 1; i <= std::min(k, c.rank); ++i) {
      ChowClass term = engine.multiply(c.classes[i], s[k - i]);
      if (i % 2 == 1)
        sk += term;
      else
        sk -= term;
    }
    require_integral(sk, d, "s" + std::to_string(k));
    s.push_back(std::move(sk));
  }
  return s;
}

Integer integrate_with_h(const ChowClass& c, const WeightDiagram& d) {
  auto g = c.grade(d);
  if (!g) {
    if (c.is_zero()) return 0;
    throw std::invalid_argument("integration of an inhomogeneous class");
  }
  return to_integer(pieri_hk(d, c, d.max_length() - *g)[d.bottom()]);
}

Integer degree_y8(const std::vector<ChowClass>& segre, const WeightDiagram& d) {
  constexpr unsigned long kN = 24;
  Integer three = 3;
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), three.get_mpz_t(), kN);
  for (unsigned long k = 9; k <= kN; ++k) {
    Integer pow3;
    mpz_pow_ui(pow3.get_mpz_t(), three.get_mpz_t(), kN - k);
    Integer term = binomial(kN, k) * pow3 * integrate_with_h(segre.at(k - 9), d);
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace cayley
