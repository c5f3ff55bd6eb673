#pragma once

// Chern and Segre classes of the normal bundle of the Cayley plane in
// P^26, of its quotient by O(1), and the degree of the variety of
// reductions Y8 obtained from them.

#include "cayley/borel.hpp"
#include "cayley/chow_ring.hpp"

#include <stdexcept>
#include <vector>

namespace cayley {

class BundleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Total Chern class by degree: classes[k] has grade k, classes[0] = 1.
struct ChernVector {
  int rank = 0;
  std::vector<ChowClass> classes;
};

/// c(N) = Σ_i (-1)^i (1 + 3/2 H)^(10-2i) e_{2i}, the e's expanded by the
/// literal divided-difference route and the H-powers by Pieri.
/// Throws BundleError on a non-integral coefficient.
ChernVector chern_normal(const WeightDiagram& d);

/// c(N̄) = c(N) / (1 + H) for 0 → O(1) → N → N̄ → 0. Throws BundleError
/// unless the degree-10 term vanishes.
ChernVector chern_projected(const ChernVector& normal, const WeightDiagram& d);

/// s_0..s_{dim-1} from s_k = -Σ_{i≥1} (-1)^i c_i s_{k-i}; the products are
/// taken in the Borel presentation.
std::vector<ChowClass> segre_classes(const ChernVector& c, const BorelEngine& engine);

/// ∫ σ · H^(dim - grade σ), by Pieri.
Integer integrate_with_h(const ChowClass& c, const WeightDiagram& d);

/// 3^24 + Σ_{k=9}^{24} (-1)^k C(24,k) 3^(24-k) ∫ H^(25-k) s_{k-9}.
Integer degree_y8(const std::vector<ChowClass>& segre, const WeightDiagram& d);

}  // namespace cayley
