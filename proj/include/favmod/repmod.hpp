#ifndef FAVMOD_REPMOD_HPP
#define FAVMOD_REPMOD_HPP

#include <map>
#include <string>
#include <vector>

#include "favmod/echelon.hpp"
#include "favmod/rootsys.hpp"

namespace favmod {

// Explicit cyclic module: nilpotent lowering operators F_1..F_N (aligned to
// an ordered generator list, by default the good ordering of positive
// roots), all matrices over exact rationals, with a distinguished cyclic
// vector. Immutable after construction.
struct RepModule {
    LieType type{Family::A, 1};
    std::string name;
    std::vector<std::string> op_labels;     // one per operator position
    std::vector<QMatrix> ops;               // D x D each
    std::vector<std::string> basis_labels;  // size D
    int cyclic_index = 0;

    int dim() const { return static_cast<int>(basis_labels.size()); }
    int num_ops() const { return static_cast<int>(ops.size()); }
    QVector cyclic_vector() const;
};

/// One-dimensional module with all operators zero.
RepModule trivial_module(LieType t);

/// Lambda^k of the vector representation of sl_{n+1}; operator for the root
/// alpha_{i,j} is the derivation extension of the matrix unit E_{j+1,i};
/// cyclic vector w_{1..k}. Operators aligned to default_good_ordering(A_n).
RepModule wedge_rep_sl(int n, int k);

/// Symplectic fundamental representations: omega_index = 1 gives the
/// standard 2n-dimensional module (any n); omega_index = 2 is supported for
/// n = 2 only and gives the 5-dimensional primitive part of Lambda^2(C^4)
/// (kernel of the symplectic contraction, computed exactly).
RepModule rep_sp(int n, int omega_index);

/// Full tensor space with F_i acting as F_i (x) 1 + 1 (x) F_i and cyclic
/// vector v1 (x) v2. The Cartan component is the cyclic span; it is not
/// materialized as a subspace.
RepModule cartan_tensor(const RepModule& m1, const RepModule& m2);

/// Re-index a module to a subsequence of its operator positions (keeping
/// their relative order). Used for the abelian-radical presentation of
/// fundamental wedge modules.
RepModule restrict_generators(const RepModule& m, const std::vector<int>& positions);

/// Wedge module of sl_{n+1} restricted to the radical of the k-th maximal
/// parabolic: operators for the roots alpha_{i,j} with i <= k <= j, in the
/// order induced by the good ordering.
RepModule radical_module_sl(int n, int k);

/// F_1^{p_1}( F_2^{p_2}( ... (F_N^{p_N} v) ... )): the rightmost factor
/// acts first.
QVector apply_monomial(const RepModule& m, const MultiExponent& p);

// Finitely supported vector-valued polynomial in u_1..u_N (or z_1..z_N),
// keyed by exponent in monomial order.
struct OrbitPolynomial {
    std::map<MultiExponent, QVector, MonomialLess> terms;
};

/// exp(u_1 F_1) ... exp(u_N F_N) v, expanded exactly; the coefficient of
/// u^q is (1/prod q_i!) * apply_monomial(q).
OrbitPolynomial exp_orbit_product(const RepModule& m);

/// exp(z_1 F_1 + ... + z_N F_N) v, expanded exactly (single exponential of
/// the sum; the two expansions agree in total degree <= 1 but differ beyond
/// unless the operators commute).
OrbitPolynomial exp_orbit_sum(const RepModule& m);

/// Oracle module for V(lambda): type A builds the Cartan tensor product of
/// wedge fundamentals; type C supports omega_1 for n <= 3 and any (m1, m2)
/// for n = 2. Throws std::invalid_argument outside this scope (G2 has no
/// oracle-side construction).
RepModule module_for_weight(LieType t, const Weight& lambda);

}  // namespace favmod

#endif
