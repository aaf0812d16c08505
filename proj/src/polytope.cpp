#include "favmod/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace favmod {

namespace {

std::string path_name(const DyckPath& p) {
    std::string s;
    for (const PositiveRoot& r : p.roots) {
        if (!s.empty()) s += " ";
        s += r.label;
    }
    return s;
}

void dyck_extend_A(int n, std::vector<std::pair<int, int>>& path,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    auto [p, q] = path.back();
    if (p == q) out.push_back(path);
    if (p + 1 <= q) {
        path.emplace_back(p + 1, q);
        dyck_extend_A(n, path, out);
        path.pop_back();
    }
    if (q + 1 <= n) {
        path.emplace_back(p, q + 1);
        dyck_extend_A(n, path, out);
        path.pop_back();
    }
}

// Type C grid: row i in 1..n, column c in the alphabet 1..2n-1, valid when
// i <= c <= 2n-i. Steps: right (alphabet successor) or down a row.
// Endpoints: diagonal (j,j) -> simple-root end, anti-diagonal (j, 2n-j) ->
// barred end (this covers the identified (n,n) once).
void dyck_extend_C(int n, std::vector<std::pair<int, int>>& path,
                   std::vector<std::pair<std::vector<std::pair<int, int>>, bool>>& out) {
    auto [r, c] = path.back();
    if (c == 2 * n - r)
        out.emplace_back(path, true);
    else if (c == r)
        out.emplace_back(path, false);
    if (c + 1 <= 2 * n - r) {
        path.emplace_back(r, c + 1);
        dyck_extend_C(n, path, out);
        path.pop_back();
    }
    if (r + 1 <= n && c >= r + 1 && c <= 2 * n - (r + 1)) {
        path.emplace_back(r + 1, c);
        dyck_extend_C(n, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> dyck_paths(LieType t) {
    if (t.family == Family::G2)
        throw std::invalid_argument("Dyck paths are not defined for G2; it uses an explicit inequality list");

    GoodOrdering ord = default_good_ordering(t);
    auto root_at = [&](int a, int b) {
        int pos = ord.position_of(a, b);
        return ord.roots[pos];
    };

    std::vector<DyckPath> paths;
    int n = t.rank;
    if (t.family == Family::A) {
        std::vector<std::vector<std::pair<int, int>>> raw;
        for (int i = 1; i <= n; ++i) {
            std::vector<std::pair<int, int>> cur{{i, i}};
            dyck_extend_A(n, cur, raw);
        }
        for (const auto& rp : raw) {
            DyckPath d;
            for (auto [a, b] : rp) d.roots.push_back(root_at(a, b));
            paths.push_back(std::move(d));
        }
    } else {
        std::vector<std::pair<std::vector<std::pair<int, int>>, bool>> raw;
        for (int i = 1; i <= n; ++i) {
            std::vector<std::pair<int, int>> cur{{i, i}};
            dyck_extend_C(n, cur, raw);
        }
        for (const auto& [rp, barred] : raw) {
            DyckPath d;
            d.barred_end = barred;
            for (auto [a, b] : rp) d.roots.push_back(root_at(a, b));
            paths.push_back(std::move(d));
        }
    }

    std::sort(paths.begin(), paths.end(), [](const DyckPath& x, const DyckPath& y) {
        auto kx = std::make_tuple(x.roots.front().a, x.roots.front().b,
                                  x.roots.back().a, x.roots.back().b);
        auto ky = std::make_tuple(y.roots.front().a, y.roots.front().b,
                                  y.roots.back().a, y.roots.back().b);
        if (kx != ky) return kx < ky;
        auto seq = [](const DyckPath& p) {
            std::vector<std::pair<int, int>> s;
            for (const PositiveRoot& r : p.roots) s.emplace_back(r.a, r.b);
            return s;
        };
        return seq(x) < seq(y);
    });
    return paths;
}

void canonicalize(LatticeSet& s) {
    std::sort(s.begin(), s.end(), MonomialLess{});
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const LatticeSet& s, const MultiExponent& p) {
    return std::binary_search(s.begin(), s.end(), p, MonomialLess{});
}

PolytopeSpec build_polytope(LieType t, const Weight& lambda) {
    if (lambda.size() != t.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight must be dominant (all coefficients >= 0)");

    GoodOrdering ord = default_good_ordering(t);
    PolytopeSpec p;
    p.dim = ord.size();
    p.labels = ord.labels();

    if (t.family == Family::G2) {
        long k = lambda[0], l = lambda[1];
        auto add = [&](std::initializer_list<int> pos, long rhs, const std::string& nm) {
            Inequality iq;
            iq.coeffs.assign(6, 0);
            for (int q : pos) iq.coeffs[q - 1] = 1;
            iq.rhs = rhs;
            iq.name = nm;
            p.ineqs.push_back(std::move(iq));
        };
        add({5}, l, "p5 <= l");
        add({6}, k, "p6 <= k");
        add({2, 3, 6}, k + l, "p2+p3+p6 <= k+l");
        add({3, 4, 6}, k + l, "p3+p4+p6 <= k+l");
        add({4, 5, 6}, k + l, "p4+p5+p6 <= k+l");
        add({1, 2, 3, 4, 5}, k + 2 * l, "p1+...+p5 <= k+2l");
        add({2, 3, 4, 5, 6}, k + 2 * l, "p2+...+p6 <= k+2l");
    } else {
        int n = t.rank;
        std::set<std::pair<std::vector<int>, long>> seen;
        for (const DyckPath& d : dyck_paths(t)) {
            Inequality iq;
            iq.coeffs.assign(p.dim, 0);
            for (const PositiveRoot& r : d.roots) {
                int pos = ord.position_of(r.a, r.b);
                iq.coeffs[pos] = 1;
            }
            int i = d.start_row();
            long rhs = 0;
            if (t.family == Family::C && d.barred_end) {
                for (int k = i; k <= n; ++k) rhs += lambda[k - 1];
            } else {
                int j = d.end_row();
                for (int k = i; k <= j; ++k) rhs += lambda[k - 1];
            }
            iq.rhs = rhs;
            iq.name = path_name(d);
            if (seen.emplace(iq.coeffs, iq.rhs).second) p.ineqs.push_back(std::move(iq));
        }
    }

    // every coordinate must be covered by some inequality, else unbounded
    for (int c = 0; c < p.dim; ++c) {
        bool covered = false;
        for (const Inequality& iq : p.ineqs)
            if (iq.coeffs[c]) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::runtime_error("polytope is unbounded in coordinate " + p.labels[c]);
    }
    return p;
}

namespace {

void check_bounded(const PolytopeSpec& p) {
    for (int c = 0; c < p.dim; ++c) {
        bool covered = false;
        for (const Inequality& iq : p.ineqs)
            if (iq.coeffs[c]) {
                covered = true;
                break;
            }
        if (!covered) {
            std::string lbl = c < static_cast<int>(p.labels.size())
                                  ? p.labels[c]
                                  : ("x" + std::to_string(c + 1));
            throw std::runtime_error("unbounded direction: coordinate " + lbl +
                                     " appears in no inequality");
        }
    }
}

// Depth-first enumeration over coordinates in position order. `slack[r]`
// is rhs_r minus the already-assigned part of inequality r; a coordinate's
// upper bound is the minimum slack over the inequalities containing it.
void dfs_lattice(const PolytopeSpec& p, int coord, std::vector<long>& slack,
                 std::vector<int>& cur, LatticeSet& out) {
    if (coord == p.dim) {
        out.emplace_back(cur);
        return;
    }
    long ub = -1;
    for (std::size_t r = 0; r < p.ineqs.size(); ++r) {
        if (!p.ineqs[r].coeffs[coord]) continue;
        if (ub < 0 || slack[r] < ub) ub = slack[r];
    }
    for (long x = 0; x <= ub; ++x) {
        cur[coord] = static_cast<int>(x);
        if (x > 0)
            for (std::size_t r = 0; r < p.ineqs.size(); ++r)
                if (p.ineqs[r].coeffs[coord]) --slack[r];
        dfs_lattice(p, coord + 1, slack, cur, out);
    }
    for (std::size_t r = 0; r < p.ineqs.size(); ++r)
        if (p.ineqs[r].coeffs[coord]) slack[r] += ub;
    cur[coord] = 0;
}

}  // namespace

LatticeSet lattice_points_serial(const PolytopeSpec& p) {
    check_bounded(p);
    LatticeSet out;
    std::vector<long> slack(p.ineqs.size());
    for (std::size_t r = 0; r < p.ineqs.size(); ++r) {
        if (p.ineqs[r].rhs < 0) return out;  // infeasible system
        slack[r] = p.ineqs[r].rhs;
    }
    std::vector<int> cur(p.dim, 0);
    dfs_lattice(p, 0, slack, cur, out);
    canonicalize(out);
    return out;
}

LatticeSet lattice_points(const PolytopeSpec& p) {
    check_bounded(p);
    for (const Inequality& iq : p.ineqs)
        if (iq.rhs < 0) return {};

    long ub0 = -1;
    for (const Inequality& iq : p.ineqs)
        if (iq.coeffs[0] && (ub0 < 0 || iq.rhs < ub0)) ub0 = iq.rhs;

#ifdef _OPENMP
    if (ub0 >= 1 && p.dim > 1) {
        // split the search tree on the first coordinate
        std::vector<LatticeSet> parts(ub0 + 1);
#pragma omp parallel for schedule(dynamic)
        for (long x0 = 0; x0 <= ub0; ++x0) {
            std::vector<long> slack(p.ineqs.size());
            for (std::size_t r = 0; r < p.ineqs.size(); ++r)
                slack[r] = p.ineqs[r].rhs - (p.ineqs[r].coeffs[0] ? x0 : 0);
            std::vector<int> cur(p.dim, 0);
            cur[0] = static_cast<int>(x0);
            dfs_lattice(p, 1, slack, cur, parts[x0]);
        }
        LatticeSet out;
        for (auto& part : parts)
            out.insert(out.end(), part.begin(), part.end());
        canonicalize(out);
        return out;
    }
#endif
    return lattice_points_serial(p);
}

LatticeSet minkowski_sum(const LatticeSet& s, const LatticeSet& t) {
    if (!s.empty() && !t.empty() && s.front().size() != t.front().size())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    LatticeSet out;
    out.reserve(s.size() * t.size());
    for (const MultiExponent& a : s)
        for (const MultiExponent& b : t) out.push_back(a + b);
    canonicalize(out);
    return out;
}

LatticeSet minkowski_power(const LatticeSet& s, int n, int ambient_dim) {
    if (n < 0) throw std::invalid_argument("minkowski_power: n must be >= 0");
    LatticeSet acc{MultiExponent::zero(ambient_dim)};
    for (int k = 0; k < n; ++k) acc = minkowski_sum(acc, s);
    return acc;
}

PolytopeSpec dilate(const PolytopeSpec& p, int n) {
    if (n < 1) throw std::invalid_argument("dilate: n must be >= 1");
    PolytopeSpec q = p;
    for (Inequality& iq : q.ineqs) iq.rhs *= n;
    return q;
}

NormalityCertificate check_normality(const PolytopeSpec& p, int n_max) {
    NormalityCertificate cert;
    LatticeSet base = lattice_points(p);
    LatticeSet sum = base;
    for (int n = 2; n <= n_max; ++n) {
        sum = minkowski_sum(sum, base);
        LatticeSet dil = lattice_points(dilate(p, n));
        for (const MultiExponent& pt : dil) {
            if (!contains(sum, pt)) {
                cert.ok = false;
                cert.level = n;
                cert.witness = pt;
                return cert;
            }
        }
        // the reverse inclusion (sums of n points lie in nP) always holds
    }
    return cert;
}

MinkowskiReport check_minkowski_decomposition(LieType t, const Weight& lambda) {
    LatticeSet direct = lattice_points(build_polytope(t, lambda));
    int n = default_good_ordering(t).size();
    LatticeSet sum{MultiExponent::zero(n)};
    for (int i = 0; i < t.rank; ++i) {
        if (lambda[i] == 0) continue;
        Weight omega(std::vector<long>(t.rank, 0));
        omega.m[i] = 1;
        LatticeSet si = lattice_points(build_polytope(t, omega));
        for (long c = 0; c < lambda[i]; ++c) sum = minkowski_sum(sum, si);
    }
    MinkowskiReport rep;
    for (const MultiExponent& p : direct)
        if (!contains(sum, p)) rep.only_in_S.push_back(p);
    for (const MultiExponent& p : sum)
        if (!contains(direct, p)) rep.only_in_sum.push_back(p);
    rep.equal = rep.only_in_S.empty() && rep.only_in_sum.empty();
    return rep;
}

bool contains_point(const PolytopeSpec& p, const QVector& x) {
    if (static_cast<int>(x.size()) != p.dim)
        throw std::invalid_argument("contains_point: dimension mismatch");
    for (const Rational& c : x)
        if (c < 0) return false;
    for (const Inequality& iq : p.ineqs) {
        Rational lhs(0);
        for (int c = 0; c < p.dim; ++c)
            if (iq.coeffs[c]) lhs += x[c];
        if (lhs > iq.rhs) return false;
    }
    return true;
}

std::vector<QVector> vertices(const PolytopeSpec& p) {
    if (p.dim > 8)
        throw std::invalid_argument("vertices(): ambient dimension > 8 unsupported "
                                    "(basic-solution enumeration is combinatorial)");
    // rows: the inequalities, then -x_i <= 0
    std::vector<std::pair<std::vector<long>, long>> rows;
    for (const Inequality& iq : p.ineqs) {
        std::vector<long> a(iq.coeffs.begin(), iq.coeffs.end());
        rows.emplace_back(std::move(a), iq.rhs);
    }
    for (int i = 0; i < p.dim; ++i) {
        std::vector<long> a(p.dim, 0);
        a[i] = -1;
        rows.emplace_back(std::move(a), 0);
    }

    std::set<QVector> seen;
    std::vector<int> comb(p.dim);
    std::vector<int> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);

    // enumerate all dim-subsets of rows
    std::vector<int> sel(p.dim);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == p.dim) {
            QMatrix a(p.dim, QVector(p.dim));
            QVector b(p.dim);
            for (int r = 0; r < p.dim; ++r) {
                for (int c = 0; c < p.dim; ++c) a[r][c] = rows[sel[r]].first[c];
                b[r] = rows[sel[r]].second;
            }
            auto x = solve_square(a, b);
            if (!x) return;
            // feasibility against every row
            for (const auto& [coeffs, rhs] : rows) {
                Rational lhs(0);
                for (int c = 0; c < p.dim; ++c)
                    if (coeffs[c]) lhs += Rational(coeffs[c]) * (*x)[c];
                if (lhs > rhs) return;
            }
            seen.insert(*x);
            return;
        }
        for (int r = start; r <= static_cast<int>(rows.size()) - (p.dim - k); ++r) {
            sel[k] = r;
            rec(r + 1, k + 1);
        }
    };
    rec(0, 0);
    return std::vector<QVector>(seen.begin(), seen.end());
}

std::vector<std::pair<QVector, int>> gob_generators(LieType t) {
    std::vector<std::pair<QVector, int>> out;
    for (int i = 1; i <= t.rank; ++i) {
        Weight omega(std::vector<long>(t.rank, 0));
        omega.m[i - 1] = 1;
        for (const QVector& v : vertices(build_polytope(t, omega)))
            out.emplace_back(v, i);
    }
    return out;
}

std::string to_ieqs(const PolytopeSpec& p) {
    std::ostringstream os;
    os << "# H-representation: rows are  b  -a_1 ... -a_" << p.dim
       << "  meaning b + a.x >= 0\n";
    os << "# coordinates:";
    for (const std::string& l : p.labels) os << " " << l;
    os << "\n";
    for (const Inequality& iq : p.ineqs) {
        os << iq.rhs;
        for (int c : iq.coeffs) os << " " << -c;
        os << "\n";
    }
    for (int i = 0; i < p.dim; ++i) {
        os << 0;
        for (int c = 0; c < p.dim; ++c) os << " " << (c == i ? 1 : 0);
        os << "\n";
    }
    return os.str();
}

}  // namespace favmod
