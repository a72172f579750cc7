#pragma once

#include <vector>

#include "katabol/partition.hpp"
#include "katabol/poly.hpp"
#include "katabol/rational.hpp"
#include "katabol/schur.hpp"

namespace katabol {

// The (q,t) scalar product on power sums: <p_lambda, p_mu> is zero off the diagonal and
// z_lambda * prod (1-q^{lambda_i})/(1-t^{lambda_i}) on it.
BivariateRational powersum_qt_norm(const Partition& lambda);

// Orthogonal polynomial family: P_mu = S_mu + (dominance-smaller Schur terms), pairwise
// orthogonal under the (q,t) scalar product.  Computed by Gram-Schmidt along a total
// order refining dominance; the result is order-independent.  Schur-basis coefficients.
RationalExpansion orthogonal_p(const Partition& mu);
// Same, along a caller-chosen processing order (must list the partitions of |mu| in an
// order refining dominance); exposed so order-independence can be tested.
RationalExpansion orthogonal_p_ordered(const Partition& mu, const std::vector<Partition>& order);

// Integral form: orthogonal_p scaled by prod over cells (1 - q^{arm} t^{leg+1}).
// Schur-basis coefficients; coefficients are certified polynomial or an
// arithmetic_error is raised.
PolyExpansion macdonald_j(const Partition& mu);

// The positive modification: macdonald_j with every p_i rescaled by 1/(1-t^i),
// re-expanded in the Schur basis.  Coefficients are the two-parameter Kostka
// polynomials; non-polynomial coefficients raise arithmetic_error.
PolyExpansion macdonald_h(const Partition& mu);

// Coefficient of S_lambda in macdonald_h(mu).
BivariatePoly qt_kostka(const Partition& lambda, const Partition& mu);

// The charge form of the one-parameter family: sum over all tableaux of evaluation mu
// of t^{charge} S_{shape}.
PolyExpansion hall_littlewood(const Partition& mu);

// Coefficient of S_lambda in hall_littlewood(mu).
BivariatePoly kostka_foulkes(const Partition& lambda, const Partition& mu);

}  // namespace katabol
