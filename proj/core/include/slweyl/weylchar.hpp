#pragma once

#include <vector>

#include "slweyl/graded_character.hpp"
#include "slweyl/superpop.hpp"

namespace slweyl {

// Local Weyl module combinatorics for the current Lie superalgebra
// sl(1|2)[t], parameterized by n = psi(h2). The graded character is
// computed by three independent routes that must agree exactly.

/// All 4^n degree tuples indexing the monomial basis of W(psi).
std::vector<BasisTuple> enumerate_basis_tuples(int n);

/// Closed form: sum over (l, k, j) of
///   q^{l(l-1)/2} [n,l]_q  q^{k(k-1)/2} [n-l,k]_q  [n-l-k,j]_q
/// at weight (du1, du2) = (-(l+j), n-l-k-2j).
GradedCharacter character_closed(int n);

/// Enumeration route: sum of q^grade u-monomials over all basis tuples.
GradedCharacter character_from_tuples(int n);

/// Enumeration route: the same sum over all super POPs.
GradedCharacter character_from_superpops(int n);

/// Ungraded character of the underlying sl(1|2)-module: the n-th convolution
/// power of the four-term weight set {(-1,-1), (-1,0), (0,0), (0,1)}.
/// Equals specialize_q1(character_closed(n)).
WeightVector g_character(int n);

}  // namespace slweyl
