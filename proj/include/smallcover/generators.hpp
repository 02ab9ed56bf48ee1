#pragma once

#include "smallcover/polytope.hpp"

namespace smallcover {

/// True iff the sorted n-subset `subset` of {0, ..., m-1} satisfies Gale's
/// evenness condition: between any two non-members lies an even number of members.
bool satisfies_gale_evenness(std::span<const int> subset, int m);

/// Simple polytope dual to the cyclic polytope C^n(m). Facet i corresponds to
/// the i-th point on the moment curve; vertices are the Gale-even n-subsets.
/// Throws std::invalid_argument unless n >= 2 and m > n.
Polytope dual_cyclic(int n, int m);

/// Cartesian product. Facets of `p` keep their indices, facets of `q` are
/// shifted by p.facet_count().
Polytope product(const Polytope& p, const Polytope& q);

/// The 1-dimensional polytope with facets {0} and {1}.
Polytope segment();

}  // namespace smallcover
