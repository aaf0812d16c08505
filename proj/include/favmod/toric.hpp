#ifndef FAVMOD_TORIC_HPP
#define FAVMOD_TORIC_HPP

#include <map>
#include <string>
#include <vector>

#include "favmod/essential.hpp"
#include "favmod/polytope.hpp"
#include "favmod/repmod.hpp"

namespace favmod {

/// dim R_n(S) = #(n-fold Minkowski sum of S); n = 0 gives 1.
long hilbert_function(const LatticeSet& s, int n, int ambient_dim);

// Scalar polynomial in u_1..u_N, exponents keyed in monomial order.
using ScalarPoly = std::map<MultiExponent, Rational, MonomialLess>;

/// Monomial-order minimum exponent with nonzero coefficient. Throws
/// std::invalid_argument on the zero polynomial.
MultiExponent lowest_term_valuation(const ScalarPoly& f);

/// {nu(xi_p / xi_M^n)} over the essential basis functionals of M^{(x)n}:
/// expands the ordered product of exponentials on the n-fold Cartan tensor
/// and takes the lowest term of each essential coordinate polynomial.
LatticeSet valuation_semigroup_layer(const RepModule& m, int n, long size_guard = 100000);

/// Desk-scale shadow of the Newton-Okounkov identity: level-1 valuation
/// points exhaust S(lambda), and (1/n)-rescaled level-n points lie in
/// P(lambda), for all n <= n_max.
bool newton_okounkov_check(LieType t, const Weight& lambda, int n_max);

// A ray of the normal fan of a type-A regular polytope.
struct Ray {
    std::vector<long> v;      // primitive integer generator
    bool is_coordinate;       // e_{i,j} family vs negative Dyck-path family
    std::string name;
};

/// The rays: one coordinate ray e per positive-root position, plus one
/// negative ray -sum(e over the path) per Dyck path of A_n.
std::vector<Ray> fan_rays_A_regular(int n);

/// Facet inner normals of P(lambda) (computed from vertex/facet incidence)
/// equal fan_rays_A_regular(n)? Requires regular lambda and N <= 6.
bool verify_fan_rays(int n, const Weight& lambda);

struct DemazureRoot {
    std::vector<long> m;
    int ray_index;  // the unique ray pairing to -1
};

/// Brute-force search over m in [-1, box_bound]^N for vectors pairing -1
/// with exactly one ray and >= 0 with all others.
std::vector<DemazureRoot> demazure_roots(const std::vector<Ray>& rays, int box_bound);
std::vector<DemazureRoot> demazure_roots_serial(const std::vector<Ray>& rays, int box_bound);

/// (3n^2 - n + 2) / 2.
long demazure_count_formula(int n);

// Coarse automorphism-group data read off the Demazure root set.
struct AutomorphismSummary {
    long total_roots = 0;
    long semisimple_roots = 0;  // roots m with -m also a root
    long unipotent_dim = 0;     // total - semisimple
    int torus_dim = 0;          // N
};

AutomorphismSummary automorphism_summary(const std::vector<Ray>& rays,
                                         const std::vector<DemazureRoot>& roots);

}  // namespace favmod

#endif
