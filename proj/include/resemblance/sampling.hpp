#pragma once

#include "resemblance/relation_engine.hpp"

#include <random>

namespace resemblance {

using Rng = std::mt19937_64;

// ordinal below w^w with up to max_terms terms, exponents <= max_exp, coefficients <= max_coeff
Ordinal random_below_omega_omega(Rng& rng, int max_terms = 4, int max_exp = 5, int max_coeff = 4);
Ordinal random_below(Rng& rng, const Ordinal& bound, int max_terms = 4, int max_coeff = 4);
ClosedSet random_closed_set(Rng& rng, const Ordinal& rho, int max_size = 5, int max_exp = 4);
// closed set built around components: kappa points plus points up to their max1
ClosedSet random_linked_set(Rng& rng, const Calculus& c, int anchors = 2, int per_anchor = 3, int max_exp = 4);
int uniform(Rng& rng, int lo, int hi);

} // namespace resemblance
