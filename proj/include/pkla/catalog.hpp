#pragma once

// Built-in worked examples.

#include <string>
#include <vector>

#include "pkla/liereal.hpp"

namespace pkla::catalog {

/// u4u3 = u4u4 = u2, H(u_j, u_k) = 1 iff j + k = 4.
APKPair two_step_5d();
/// u1u3 = u1, u3u3 = u3, H(u0,u3) = H(u1,u2) = 1.
APKPair flat_4d();
/// U = C with 1.1 = 1 and H(1,1) = -4 beta.
APKPair einstein_c(const Rational& beta = 1);
/// A = span{x, x^2}, B(x, x^2) = 1, B(x, x) = t.
RealSymmetricAlgebra kodaira_thurston(const Rational& t = 0);
/// span{a1,a2,a3} with a1a1 = a2a2 = a3 (no symmetric form exists on aff of it).
RealAlgebra remark_algebra();
/// The six-dimensional nilpotent example with non-associative LSA.
LieRealization n7();

std::vector<std::string> names();

}  // namespace pkla::catalog
