#include <ostream>

#include "pencil/bigint.hpp"
#include "pencil/fp.hpp"
#include "pencil/rational.hpp"

namespace pencil {

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Fp& v) { return os << v.str(); }

}  // namespace pencil
