#ifndef FAVMOD_ESSENTIAL_HPP
#define FAVMOD_ESSENTIAL_HPP

#include <vector>

#include "favmod/echelon.hpp"
#include "favmod/polytope.hpp"
#include "favmod/repmod.hpp"
#include "favmod/rootsys.hpp"

namespace favmod {

// Result of the increasing-order filtration sweep over a cyclic module.
struct EssentialResult {
    LatticeSet es;                    // essential exponents, increasing
    std::vector<QVector> vectors;     // v_M(p) per entry of es, module coordinates
    EchelonBasis echelon;             // echelonized span, rows labeled
    int d_max = 0;                    // maximal total degree in es
    std::vector<long> pbw_hilbert;    // #essential exponents per total degree
    std::vector<MultiExponent> annihilator_gens;
    int module_dim = 0;

    EssentialResult() : echelon(0) {}
    int rank() const { return static_cast<int>(es.size()); }
    int index_of(const MultiExponent& p) const;  // -1 if not essential
};

struct EssentialOptions {
    // When true the module is expected to be cyclic: the sweep must reach
    // rank == dim, otherwise a cyclicity error is thrown. Cartan tensor
    // components pass false (their cyclic span is a proper subspace).
    bool expect_cyclic = true;
};

/// Sweeps exponents in increasing monomial order, inserting v_M(p) into an
/// echelon basis; p is essential iff the insertion is independent. Stops
/// when the rank reaches dim(M), or when a whole degree level adds no rank
/// (the cyclic span is then saturated: monomial vectors of degree <= d span
/// U_d v, and U_{d+1} v = U_d v propagates upward).
EssentialResult essential_set(const RepModule& m, EssentialOptions opts = {});

/// Minimal generators of the complement up-set {p : p not in es} under
/// componentwise divisibility. Throws std::invalid_argument if es is not
/// downward closed.
std::vector<MultiExponent> annihilator_generators(const LatticeSet& es);

/// Entry s = #{p in es : degree(p) = s}.
std::vector<long> pbw_hilbert(const LatticeSet& es);

/// Closed-form essential exponent for the wedge basis vector w_I of
/// Lambda^k(C^{n+1}): I = {i_1 < ... < i_s <= k < i_{s+1} < ... < i_k},
/// J = {1..k} \ {i_1..i_s} = (j_1 < ... < j_{k-s}); the exponent of
/// f_{j_1, i_k - 1} f_{j_2, i_{k-1} - 1} ... f_{j_{k-s}, i_{s+1} - 1}
/// in good-ordering coordinates. Throws for invalid I.
MultiExponent fundamental_essential_A(int n, int k, const std::vector<int>& I);

/// Coordinates with respect to the essential basis {v_M(p)}: the pivot
/// submatrix of the stored vectors is inverted once; coords() certifies the
/// reconstruction exactly and throws if the vector is outside the span.
class EssentialCoordinates {
public:
    explicit EssentialCoordinates(const EssentialResult& r);
    QVector coords(const QVector& w) const;

private:
    const EssentialResult& result_;
    std::vector<int> pivots_;
    QMatrix inv_;  // inverse of vectors restricted to pivot rows
};

struct StructureConstant {
    Rational leading;  // c_{p,q}^{p+q}
    std::vector<std::pair<MultiExponent, Rational>> lower;  // at essential r < p+q
};

/// Structure constants of the coordinate-ring product: expands F^r(v (x) v)
/// on cartan_tensor(M, M) in the essential (x) essential basis and reads
/// the (p, q) coefficient, for r = p+q and every essential r < p+q.
/// Precomputes the tensor square once; reuse for many pairs.
class StructureConstantEngine {
public:
    explicit StructureConstantEngine(const RepModule& m);
    StructureConstant constant(const MultiExponent& p, const MultiExponent& q) const;
    const EssentialResult& base() const { return base_; }
    const EssentialResult& square() const { return square_; }

private:
    RepModule module_;
    RepModule tensor_;
    EssentialResult base_;
    EssentialResult square_;
    QMatrix basis_inv_;  // inverse of the essential basis matrix of M
};

/// c_{p,q}^{p+q} and the sub-leading coefficients, one-shot.
StructureConstant structure_constant(const RepModule& m, const MultiExponent& p,
                                     const MultiExponent& q);

/// es of the n-fold Cartan tensor power of M. Throws when dim(M)^n exceeds
/// the size guard.
LatticeSet essential_semigroup_layer(const RepModule& m, int n, long size_guard = 100000);

struct CompareReport {
    bool equal = true;
    LatticeSet only_in_es;
    LatticeSet only_in_S;
    LatticeSet es;
    LatticeSet S;
};

/// Builds V(lambda) through the oracle construction, computes es, certifies
/// the rank against weyl_dim, and compares with the lattice points of
/// P(lambda).
CompareReport compare_es_vs_S(LieType t, const Weight& lambda);

}  // namespace favmod

#endif
