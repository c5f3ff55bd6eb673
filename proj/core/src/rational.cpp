#include "cayley/rational.hpp"

#include <stdexcept>

namespace cayley {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("non-integral value " + to_string(q));
  return q.get_num();
}

}  // namespace cayley
