#include "favmod/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace favmod {

long hilbert_function(const LatticeSet& s, int n, int ambient_dim) {
    if (n < 0) throw std::invalid_argument("hilbert_function: n must be >= 0");
    return static_cast<long>(minkowski_power(s, n, ambient_dim).size());
}

MultiExponent lowest_term_valuation(const ScalarPoly& f) {
    for (const auto& [p, c] : f)
        if (c != 0) return p;
    throw std::invalid_argument("lowest_term_valuation: zero polynomial");
}

LatticeSet valuation_semigroup_layer(const RepModule& m, int n, long size_guard) {
    if (n < 1) throw std::invalid_argument("valuation_semigroup_layer: n must be >= 1");
    long size = 1;
    for (int k = 0; k < n; ++k) {
        size *= m.dim();
        if (size > size_guard)
            throw std::invalid_argument("valuation_semigroup_layer: dim^" + std::to_string(n) +
                                        " exceeds the size guard");
    }
    RepModule power = m;
    for (int k = 1; k < n; ++k) power = cartan_tensor(power, m);

    EssentialResult r = essential_set(power, {/*expect_cyclic=*/false});
    EssentialCoordinates ec(r);

    // D_p(u) = sum_q <coordinate p of F^q v / prod(q_i!)> u^q
    std::vector<ScalarPoly> coordinate_polys(r.rank());
    for (const auto& [q, w] : exp_orbit_product(power).terms) {
        QVector c = ec.coords(w);
        for (int t = 0; t < r.rank(); ++t)
            if (c[t] != 0) coordinate_polys[t][q] = c[t];
    }

    LatticeSet out;
    out.reserve(r.rank());
    for (const ScalarPoly& f : coordinate_polys) out.push_back(lowest_term_valuation(f));
    canonicalize(out);
    return out;
}

bool newton_okounkov_check(LieType t, const Weight& lambda, int n_max) {
    RepModule m = module_for_weight(t, lambda);
    PolytopeSpec p = build_polytope(t, lambda);
    LatticeSet s = lattice_points(p);
    for (int n = 1; n <= n_max; ++n) {
        LatticeSet layer = valuation_semigroup_layer(m, n);
        if (n == 1) {
            if (layer != s) return false;
            continue;
        }
        for (const MultiExponent& q : layer) {
            QVector x(q.size());
            for (int c = 0; c < q.size(); ++c) {
                x[c] = Rational(q[c], n);
                x[c].canonicalize();
            }
            if (!contains_point(p, x)) return false;
        }
    }
    return true;
}

std::vector<Ray> fan_rays_A_regular(int n) {
    LieType t(Family::A, n);
    GoodOrdering ord = default_good_ordering(t);
    int dim = ord.size();
    std::vector<Ray> rays;
    for (int pos = 0; pos < dim; ++pos) {
        Ray r;
        r.v.assign(dim, 0);
        r.v[pos] = 1;
        r.is_coordinate = true;
        r.name = "e " + ord.roots[pos].label;
        rays.push_back(std::move(r));
    }
    for (const DyckPath& path : dyck_paths(t)) {
        Ray r;
        r.v.assign(dim, 0);
        std::string nm = "-sum";
        for (const PositiveRoot& root : path.roots) {
            r.v[ord.position_of(root.a, root.b)] = -1;
            nm += " " + root.label;
        }
        r.is_coordinate = false;
        r.name = nm;
        rays.push_back(std::move(r));
    }
    return rays;
}

namespace {

// affine dimension of a point set, via echelon rank of the differences
int affine_rank(const std::vector<QVector>& pts) {
    if (pts.size() <= 1) return 0;
    EchelonBasis ech(static_cast<int>(pts.front().size()));
    MultiExponent dummy;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        QVector d(pts[k].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[k][c] - pts.front()[c];
        ech.insert(d, dummy);
    }
    return ech.rank();
}

}  // namespace

bool verify_fan_rays(int n, const Weight& lambda) {
    LieType t(Family::A, n);
    if (lambda.size() != n) throw std::invalid_argument("weight length does not match rank");
    for (int i = 0; i < n; ++i)
        if (lambda[i] <= 0)
            throw std::invalid_argument("verify_fan_rays: lambda must be regular (all m_i > 0)");
    PolytopeSpec p = build_polytope(t, lambda);
    if (p.dim > 6) throw std::invalid_argument("verify_fan_rays: dimension guard N <= 6");

    std::vector<QVector> verts = vertices(p);

    // candidate facet rows: the inequalities (outer normal +a) and the
    // nonnegativity rows (outer normal -e_i); the fan rays are the inner
    // normals, i.e. the negated outer normals.
    std::set<std::vector<long>> normals;
    auto consider = [&](const std::vector<long>& outer, long rhs) {
        std::vector<QVector> tight;
        for (const QVector& v : verts) {
            Rational lhs(0);
            for (int c = 0; c < p.dim; ++c)
                if (outer[c]) lhs += Rational(outer[c]) * v[c];
            if (lhs == rhs) tight.push_back(v);
        }
        if (affine_rank(tight) != p.dim - 1) return;
        std::vector<long> inner(p.dim);
        for (int c = 0; c < p.dim; ++c) inner[c] = -outer[c];
        long g = 0;
        for (long x : inner) g = std::gcd(g, std::abs(x));
        if (g > 1)
            for (long& x : inner) x /= g;
        normals.insert(inner);
    };
    for (const Inequality& iq : p.ineqs) {
        std::vector<long> outer(iq.coeffs.begin(), iq.coeffs.end());
        consider(outer, iq.rhs);
    }
    for (int i = 0; i < p.dim; ++i) {
        std::vector<long> outer(p.dim, 0);
        outer[i] = -1;
        consider(outer, 0);
    }

    std::set<std::vector<long>> expected;
    for (const Ray& r : fan_rays_A_regular(n)) expected.insert(r.v);
    return normals == expected;
}

namespace {

long pair_with(const std::vector<long>& ray, const std::vector<long>& m) {
    long s = 0;
    for (std::size_t k = 0; k < ray.size(); ++k) s += ray[k] * m[k];
    return s;
}

// check the defining conditions; returns the distinguished ray or -1
int demazure_tau(const std::vector<Ray>& rays, const std::vector<long>& m) {
    int tau = -1;
    for (std::size_t r = 0; r < rays.size(); ++r) {
        long s = pair_with(rays[r].v, m);
        if (s >= 0) continue;
        if (s != -1 || tau >= 0) return -1;
        tau = static_cast<int>(r);
    }
    return tau;
}

void demazure_scan(const std::vector<Ray>& rays, int box_bound, long first,
                   std::vector<DemazureRoot>& out) {
    std::size_t dim = rays.front().v.size();
    std::vector<long> m(dim, -1);
    m[0] = first;
    // odometer over the remaining coordinates
    while (true) {
        int tau = demazure_tau(rays, m);
        if (tau >= 0) out.push_back({m, tau});
        std::size_t k = dim - 1;
        while (k >= 1) {
            if (m[k] < box_bound) {
                ++m[k];
                break;
            }
            m[k] = -1;
            --k;
        }
        if (k == 0) break;
    }
}

}  // namespace

std::vector<DemazureRoot> demazure_roots_serial(const std::vector<Ray>& rays, int box_bound) {
    if (box_bound < 1) throw std::invalid_argument("demazure_roots: box_bound must be >= 1");
    if (rays.empty()) return {};
    std::vector<DemazureRoot> out;
    if (rays.front().v.size() == 1) {
        for (long x = -1; x <= box_bound; ++x) {
            std::vector<long> m{x};
            int tau = demazure_tau(rays, m);
            if (tau >= 0) out.push_back({m, tau});
        }
        return out;
    }
    for (long first = -1; first <= box_bound; ++first) demazure_scan(rays, box_bound, first, out);
    return out;
}

std::vector<DemazureRoot> demazure_roots(const std::vector<Ray>& rays, int box_bound) {
    if (box_bound < 1) throw std::invalid_argument("demazure_roots: box_bound must be >= 1");
    if (rays.empty()) return {};
#ifdef _OPENMP
    if (rays.front().v.size() > 1) {
        // split on the leading coordinate
        int vals = box_bound + 2;
        std::vector<std::vector<DemazureRoot>> parts(vals);
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < vals; ++k) demazure_scan(rays, box_bound, k - 1, parts[k]);
        std::vector<DemazureRoot> out;
        for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
        return out;
    }
#endif
    return demazure_roots_serial(rays, box_bound);
}

long demazure_count_formula(int n) {
    if (n < 1) throw std::invalid_argument("demazure_count_formula: n must be >= 1");
    long v = 3L * n * n - n + 2;
    return v / 2;
}

AutomorphismSummary automorphism_summary(const std::vector<Ray>& rays,
                                         const std::vector<DemazureRoot>& roots) {
    AutomorphismSummary s;
    s.total_roots = static_cast<long>(roots.size());
    s.torus_dim = rays.empty() ? 0 : static_cast<int>(rays.front().v.size());
    std::set<std::vector<long>> have;
    for (const DemazureRoot& r : roots) have.insert(r.m);
    for (const DemazureRoot& r : roots) {
        std::vector<long> neg(r.m.size());
        for (std::size_t k = 0; k < r.m.size(); ++k) neg[k] = -r.m[k];
        if (have.count(neg)) ++s.semisimple_roots;
    }
    s.unipotent_dim = s.total_roots - s.semisimple_roots;
    return s;
}

}  // namespace favmod
