#ifndef FAVMOD_POLYTOPE_HPP
#define FAVMOD_POLYTOPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "favmod/echelon.hpp"
#include "favmod/rootsys.hpp"

namespace favmod {

// A (symplectic) Dyck path: a monotone sequence of positive roots from a
// simple root to a diagonal endpoint. In type C `barred_end` distinguishes
// the anti-diagonal endpoint alpha_{j,jbar} (bound m_i + ... + m_n) from the
// simple endpoint alpha_j (bound m_i + ... + m_j).
struct DyckPath {
    std::vector<PositiveRoot> roots;
    bool barred_end = false;

    int start_row() const { return roots.front().a; }
    int end_row() const { return roots.back().a; }
};

/// Complete duplicate-free enumeration of the (symplectic) Dyck paths,
/// sorted by endpoints, then lexicographically on the path.
/// Throws std::invalid_argument for G2 (which uses an explicit system).
std::vector<DyckPath> dyck_paths(LieType t);

// One 0/1 inequality  coeffs . x <= rhs  in good-ordering coordinates.
struct Inequality {
    std::vector<int> coeffs;
    long rhs = 0;
    std::string name;  // path or rule that produced it

    bool operator==(const Inequality& o) const {
        return coeffs == o.coeffs && rhs == o.rhs;
    }
};

// Integer inequality system {x >= 0, Ax <= b}; coordinates are labeled by
// the good ordering of positive roots.
struct PolytopeSpec {
    int dim = 0;
    std::vector<Inequality> ineqs;
    std::vector<std::string> labels;
};

using LatticeSet = std::vector<MultiExponent>;  // sorted by monomial order

/// Sort + dedupe into the canonical representation.
void canonicalize(LatticeSet& s);
bool contains(const LatticeSet& s, const MultiExponent& p);

/// P(lambda): one inequality per Dyck path (types A, C) or the explicit
/// 7-inequality system (G2), coordinates aligned to default_good_ordering.
/// Duplicates arising from the alpha_{i,n} = alpha_{i,nbar} identification
/// are removed. Throws std::invalid_argument for non-dominant lambda.
PolytopeSpec build_polytope(LieType t, const Weight& lambda);

/// All lattice points {p >= 0 : Ap <= b}, canonically sorted. Throws
/// std::runtime_error naming the free coordinate if some coordinate appears
/// in no inequality (unbounded direction).
LatticeSet lattice_points(const PolytopeSpec& p);      // OpenMP over the first coordinate
LatticeSet lattice_points_serial(const PolytopeSpec& p);  // reference implementation

LatticeSet minkowski_sum(const LatticeSet& s, const LatticeSet& t);
/// n-fold Minkowski sum of s with itself (n >= 1); n = 0 gives {0}.
LatticeSet minkowski_power(const LatticeSet& s, int n, int ambient_dim);

/// Same coefficient vectors, rhs multiplied by n (n >= 1).
PolytopeSpec dilate(const PolytopeSpec& p, int n);

struct NormalityCertificate {
    bool ok = true;
    int level = 0;           // first failing dilation level
    MultiExponent witness;   // lattice point of nP not a sum of n points of P
};

/// Checks lattice_points(dilate(P,n)) == n-fold Minkowski sum of
/// lattice_points(P) for 2 <= n <= n_max.
NormalityCertificate check_normality(const PolytopeSpec& p, int n_max);

struct MinkowskiReport {
    bool equal = true;
    LatticeSet only_in_S;     // in S(lambda) but not in the Minkowski sum
    LatticeSet only_in_sum;   // in the Minkowski sum but not in S(lambda)
};

/// S(lambda) == sum_i m_i * S(omega_i)?
MinkowskiReport check_minkowski_decomposition(LieType t, const Weight& lambda);

/// All vertices, exact rational coordinates, deduplicated and sorted:
/// enumerates N-subsets of the inequality rows (including x_i >= 0 facets)
/// and keeps feasible basic solutions. Throws for ambient dimension > 8.
std::vector<QVector> vertices(const PolytopeSpec& p);

/// Pairs (vertex of P(omega_i), i) over all fundamental weights; the
/// generator list of the global Okounkov cone.
std::vector<std::pair<QVector, int>> gob_generators(LieType t);

/// Does the rational point satisfy x >= 0 and every inequality?
bool contains_point(const PolytopeSpec& p, const QVector& x);

/// Plain-text H-representation: one row "b  -a_1 ... -a_N" per inequality
/// (b + a.x >= 0 convention), followed by the x_i >= 0 rows.
std::string to_ieqs(const PolytopeSpec& p);

}  // namespace favmod

#endif
