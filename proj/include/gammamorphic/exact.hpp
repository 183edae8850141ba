#ifndef GAMMAMORPHIC_EXACT_HPP
#define GAMMAMORPHIC_EXACT_HPP

// Arbitrary-precision integers and rationals used by the exact recursion
// oracles and the Bernoulli table.  Backed by boost::multiprecision; the
// numbers involved stay well below a megabyte so the header-only backend
// is plenty.

#include <boost/multiprecision/cpp_int.hpp>

namespace gammamorphic {

using exact_int = boost::multiprecision::cpp_int;
using exact_rat = boost::multiprecision::cpp_rational;

} // namespace gammamorphic

#endif
