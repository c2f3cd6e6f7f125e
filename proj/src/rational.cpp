#include "popdec/rational.hpp"

#include <ostream>

namespace popdec {

std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << z.v_.get_str(); }

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace popdec
