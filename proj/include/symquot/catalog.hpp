#pragma once

#include <string>
#include <vector>

#include "symquot/symplectic_double.hpp"

namespace symquot {

/// Built-in groups:
///   weyl:A{n}      S_{n+1} on the root lattice, n <= 8
///   weyl:B{n}      signed permutations of C^n, n <= 6
///   weyl:D{n}      even-signed permutations of C^n, 2 <= n <= 6
///   weyl:G2        dihedral group of order 12 on the root lattice
///   cyclic:{m}     [[z]] on C^1 at conductor m, m <= 1000
///   symmetric:{n}  permutation matrices on C^n, n <= 8
///   neg2d          {I, -I} on C^2
/// Throws InputError for unknown names and OrderExceededError past max_order.
Representation catalog(const std::string& name, std::size_t max_order = kDefaultMaxOrder);

/// One example name per family plus the full list used by the test suites.
std::vector<std::string> catalog_names();

}  // namespace symquot
