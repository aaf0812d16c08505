#include "favmod/essential.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace favmod {

int EssentialResult::index_of(const MultiExponent& p) const {
    auto it = std::lower_bound(es.begin(), es.end(), p, MonomialLess{});
    if (it == es.end() || !(*it == p)) return -1;
    return static_cast<int>(it - es.begin());
}

EssentialResult essential_set(const RepModule& m, EssentialOptions opts) {
    int n = m.num_ops(), dim = m.dim();
    EssentialResult res;
    res.echelon = EchelonBasis(dim);
    res.module_dim = dim;

    for (int degree = 0;; ++degree) {
        bool added = false;
        for (const MultiExponent& p : exponents_of_degree(n, degree)) {
            QVector v = apply_monomial(m, p);
            if (is_zero_vector(v)) continue;
            if (res.echelon.insert(v, p)) {
                res.es.push_back(p);
                res.vectors.push_back(std::move(v));
                res.d_max = degree;
                added = true;
                if (res.echelon.rank() == dim) break;
            }
        }
        if (res.echelon.rank() == dim) break;
        if (degree > 0 && !added) break;  // span saturated, nothing later can be independent
    }

    if (opts.expect_cyclic && res.echelon.rank() != dim)
        throw std::runtime_error("module is not cyclic: rank " +
                                 std::to_string(res.echelon.rank()) + " of dimension " +
                                 std::to_string(dim) + " (" + m.name + ")");

    res.pbw_hilbert = pbw_hilbert(res.es);
    res.annihilator_gens = annihilator_generators(res.es);
    return res;
}

std::vector<MultiExponent> annihilator_generators(const LatticeSet& es) {
    if (es.empty()) throw std::invalid_argument("empty essential set");
    int n = es.front().size();
    std::set<std::vector<int>> have;
    for (const MultiExponent& p : es) have.insert(p.v);

    auto in_es = [&](const MultiExponent& q) { return have.count(q.v) > 0; };

    // downward closure (complement of a monomial ideal)
    for (const MultiExponent& p : es) {
        for (int i = 0; i < n; ++i) {
            if (p[i] == 0) continue;
            MultiExponent q = p;
            q[i] -= 1;
            if (!in_es(q))
                throw std::invalid_argument("essential set is not downward closed at " + p.str());
        }
    }

    std::set<std::vector<int>> gens;
    for (const MultiExponent& p : es) {
        for (int i = 0; i < n; ++i) {
            MultiExponent q = p;
            q[i] += 1;
            if (in_es(q)) continue;
            bool minimal = true;
            for (int j = 0; j < n && minimal; ++j) {
                if (q[j] == 0) continue;
                MultiExponent r = q;
                r[j] -= 1;
                if (!in_es(r)) minimal = false;
            }
            if (minimal) gens.insert(q.v);
        }
    }
    std::vector<MultiExponent> out;
    for (const std::vector<int>& g : gens) out.emplace_back(g);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::vector<long> pbw_hilbert(const LatticeSet& es) {
    std::vector<long> h;
    for (const MultiExponent& p : es) {
        int d = p.degree();
        if (d >= static_cast<int>(h.size())) h.resize(d + 1, 0);
        ++h[d];
    }
    return h;
}

MultiExponent fundamental_essential_A(int n, int k, const std::vector<int>& I) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (static_cast<int>(I.size()) != k)
        throw std::invalid_argument("I must be a k-subset of {1..n+1}");
    std::vector<int> is = I;
    std::sort(is.begin(), is.end());
    for (std::size_t t = 0; t < is.size(); ++t) {
        if (is[t] < 1 || is[t] > n + 1 || (t > 0 && is[t] == is[t - 1]))
            throw std::invalid_argument("I must be a k-subset of {1..n+1}");
    }

    int s = 0;
    while (s < k && is[s] <= k) ++s;

    std::vector<bool> taken(k + 1, false);
    for (int t = 0; t < s; ++t) taken[is[t]] = true;
    std::vector<int> J;
    for (int x = 1; x <= k; ++x)
        if (!taken[x]) J.push_back(x);

    GoodOrdering ord = default_good_ordering(LieType(Family::A, n));
    MultiExponent p = MultiExponent::zero(ord.size());
    // factor t (1-based) pairs j_t with i_{k+1-t}
    for (std::size_t t = 0; t < J.size(); ++t) {
        int row = J[t];
        int col = is[k - 1 - t] - 1;  // i_{k-t} in 1-based is is[k-1-t]
        int pos = ord.position_of(row, col);
        if (pos < 0) throw std::logic_error("fundamental_essential_A: invalid root");
        p[pos] += 1;
    }
    return p;
}

EssentialCoordinates::EssentialCoordinates(const EssentialResult& r)
    : result_(r), pivots_(r.echelon.pivots()) {
    int rank = r.rank();
    QMatrix vp(rank, QVector(rank));
    for (int row = 0; row < rank; ++row)
        for (int col = 0; col < rank; ++col) vp[row][col] = r.vectors[col][pivots_[row]];
    auto inv = invert(vp);
    if (!inv) throw std::logic_error("essential basis pivot submatrix is singular");
    inv_ = std::move(*inv);
}

QVector EssentialCoordinates::coords(const QVector& w) const {
    int rank = result_.rank();
    if (static_cast<int>(w.size()) != result_.module_dim)
        throw std::invalid_argument("coords: dimension mismatch");
    QVector wp(rank);
    for (int row = 0; row < rank; ++row) wp[row] = w[pivots_[row]];
    QVector c = mat_vec(inv_, wp);
    // certify: the combination reconstructs w exactly
    QVector recon(result_.module_dim, Rational(0));
    for (int k = 0; k < rank; ++k) {
        if (c[k] == 0) continue;
        const QVector& vk = result_.vectors[k];
        for (int t = 0; t < result_.module_dim; ++t)
            if (vk[t] != 0) recon[t] += c[k] * vk[t];
    }
    if (recon != w)
        throw std::invalid_argument("vector is not in the essential span");
    return c;
}

StructureConstantEngine::StructureConstantEngine(const RepModule& m)
    : module_(m), tensor_(cartan_tensor(m, m)) {
    base_ = essential_set(module_);  // must be cyclic: basis matrix is square
    square_ = essential_set(tensor_, {/*expect_cyclic=*/false});
    int d = module_.dim();
    QMatrix basis(d, QVector(d));
    for (int col = 0; col < d; ++col)
        for (int row = 0; row < d; ++row) basis[row][col] = base_.vectors[col][row];
    auto inv = invert(basis);
    if (!inv) throw std::logic_error("essential basis matrix is singular");
    basis_inv_ = std::move(*inv);
}

StructureConstant StructureConstantEngine::constant(const MultiExponent& p,
                                                    const MultiExponent& q) const {
    int ip = base_.index_of(p), iq = base_.index_of(q);
    if (ip < 0 || iq < 0)
        throw std::invalid_argument("structure_constant: exponent is not essential");
    int d = module_.dim();
    MultiExponent target = p + q;

    auto coefficient_at = [&](const MultiExponent& r) {
        QVector w = apply_monomial(tensor_, r);
        // C = Binv T Binv^T where T is w reshaped to d x d
        QMatrix t(d, QVector(d));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) t[a][b] = w[a * d + b];
        QMatrix m1 = mat_mul(basis_inv_, t);
        // row ip of m1 times column of Binv^T => dot with row iq of Binv
        Rational acc(0);
        for (int k = 0; k < d; ++k)
            if (m1[ip][k] != 0 && basis_inv_[iq][k] != 0) acc += m1[ip][k] * basis_inv_[iq][k];
        return acc;
    };

    StructureConstant out;
    out.leading = coefficient_at(target);
    for (const MultiExponent& r : square_.es) {
        int cmp = monomial_compare(r, target);
        if (cmp >= 0) break;  // es is sorted increasing
        out.lower.emplace_back(r, coefficient_at(r));
    }
    return out;
}

StructureConstant structure_constant(const RepModule& m, const MultiExponent& p,
                                     const MultiExponent& q) {
    return StructureConstantEngine(m).constant(p, q);
}

LatticeSet essential_semigroup_layer(const RepModule& m, int n, long size_guard) {
    if (n < 1) throw std::invalid_argument("essential_semigroup_layer: n must be >= 1");
    long size = 1;
    for (int k = 0; k < n; ++k) {
        size *= m.dim();
        if (size > size_guard)
            throw std::invalid_argument("essential_semigroup_layer: dim^" + std::to_string(n) +
                                        " exceeds the size guard");
    }
    RepModule power = m;
    for (int k = 1; k < n; ++k) power = cartan_tensor(power, m);
    return essential_set(power, {/*expect_cyclic=*/false}).es;
}

CompareReport compare_es_vs_S(LieType t, const Weight& lambda) {
    RepModule m = module_for_weight(t, lambda);
    EssentialResult r = essential_set(m, {/*expect_cyclic=*/false});

    Integer expected = weyl_dim(t, lambda);
    if (Integer(r.rank()) != expected)
        throw std::runtime_error("oracle dimension mismatch for " + t.name() + " " +
                                 lambda.str() + ": rank " + std::to_string(r.rank()) +
                                 " vs weyl_dim " + expected.get_str());

    CompareReport rep;
    rep.es = r.es;
    rep.S = lattice_points(build_polytope(t, lambda));
    for (const MultiExponent& p : rep.es)
        if (!contains(rep.S, p)) rep.only_in_es.push_back(p);
    for (const MultiExponent& p : rep.S)
        if (!contains(rep.es, p)) rep.only_in_S.push_back(p);
    rep.equal = rep.only_in_es.empty() && rep.only_in_S.empty();
    return rep;
}

}  // namespace favmod
