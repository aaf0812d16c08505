#include "favmod/repmod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace favmod {

QVector RepModule::cyclic_vector() const {
    QVector v(dim(), Rational(0));
    v[cyclic_index] = 1;
    return v;
}

RepModule trivial_module(LieType t) {
    RepModule m{t, "trivial", {}, {}, {"v"}, 0};
    GoodOrdering ord = default_good_ordering(t);
    m.op_labels = ord.labels();
    m.ops.assign(ord.size(), QMatrix(1, QVector(1, Rational(0))));
    return m;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::string subset_label(const std::vector<int>& s) {
    std::string l = "w[";
    for (std::size_t i = 0; i < s.size(); ++i)
        l += (i ? "," : "") + std::to_string(s[i]);
    return l + "]";
}

}  // namespace

RepModule wedge_rep_sl(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("wedge_rep_sl: need 1 <= k <= n");
    LieType t(Family::A, n);
    GoodOrdering ord = default_good_ordering(t);

    std::vector<std::vector<int>> basis = subsets(n + 1, k);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    int d = static_cast<int>(basis.size());

    RepModule m;
    m.type = t;
    m.name = "wedge(" + std::to_string(n) + "," + std::to_string(k) + ")";
    m.op_labels = ord.labels();
    for (const std::vector<int>& s : basis) m.basis_labels.push_back(subset_label(s));
    m.cyclic_index = index[subsets(k, k).front()];  // {1..k} is lexicographically first anyway

    for (const PositiveRoot& root : ord.roots) {
        int i = root.a, j = root.b;  // E_{j+1,i}: w_i -> w_{j+1}
        QMatrix f(d, QVector(d, Rational(0)));
        for (const std::vector<int>& s : basis) {
            auto it = std::find(s.begin(), s.end(), i);
            if (it == s.end()) continue;
            if (std::find(s.begin(), s.end(), j + 1) != s.end()) continue;
            std::vector<int> ns = s;
            ns[it - s.begin()] = j + 1;
            // Koszul sign: elements of s\{i} strictly between i and j+1
            int between = 0;
            int lo = std::min(i, j + 1), hi = std::max(i, j + 1);
            for (int x : s)
                if (x != i && lo < x && x < hi) ++between;
            std::sort(ns.begin(), ns.end());
            f[index[ns]][index[s]] += (between % 2 ? Rational(-1) : Rational(1));
        }
        m.ops.push_back(std::move(f));
    }
    return m;
}

namespace {

// Standard symplectic module C^{2n}; basis e_1..e_n, f_n..f_1 in that order
// (weights eps_1, ..., eps_n, -eps_n, ..., -eps_1).
int e_index(int /*n*/, int i) { return i - 1; }
int f_index(int n, int j) { return n + (n - j); }

RepModule sp_standard(int n) {
    LieType t(Family::C, n);
    GoodOrdering ord = default_good_ordering(t);
    int d = 2 * n;

    RepModule m;
    m.type = t;
    m.name = "sp(" + std::to_string(2 * n) + ") standard";
    m.op_labels = ord.labels();
    for (int i = 1; i <= n; ++i) m.basis_labels.push_back("w[" + std::to_string(i) + "]");
    for (int j = n; j >= 1; --j) m.basis_labels.push_back("w[" + std::to_string(j) + "bar]");
    m.cyclic_index = 0;

    for (const PositiveRoot& root : ord.roots) {
        int i = root.a, col = root.b;
        QMatrix f(d, QVector(d, Rational(0)));
        if (col <= n - 1) {
            // alpha_{i,col} = eps_i - eps_{col+1}
            int j = col + 1;
            f[e_index(n, j)][e_index(n, i)] = 1;
            f[f_index(n, i)][f_index(n, j)] = -1;
        } else {
            // eps_i + eps_j with j = n for the identified column, else barred
            int j = (col == n) ? n : 2 * n - col;
            if (i == j) {
                f[f_index(n, i)][e_index(n, i)] = 1;
            } else {
                f[f_index(n, i)][e_index(n, j)] = 1;
                f[f_index(n, j)][e_index(n, i)] = 1;
            }
        }
        m.ops.push_back(std::move(f));
    }
    return m;
}

// Primitive part of Lambda^2(C^4) for sp_4: kernel of the symplectic
// contraction, with operators restricted to it.
RepModule sp4_primitive_wedge() {
    int n = 2;
    RepModule std4 = sp_standard(n);
    int d4 = std4.dim();

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < d4; ++a)
        for (int b = a + 1; b < d4; ++b) pairs.emplace_back(a, b);
    std::map<std::pair<int, int>, int> pidx;
    for (std::size_t i = 0; i < pairs.size(); ++i) pidx[pairs[i]] = static_cast<int>(i);
    int d6 = static_cast<int>(pairs.size());

    // derivation extension of each operator to Lambda^2
    std::vector<QMatrix> wedge_ops;
    for (const QMatrix& f : std4.ops) {
        QMatrix w(d6, QVector(d6, Rational(0)));
        for (auto [a, b] : pairs) {
            for (int tgt = 0; tgt < d4; ++tgt) {
                if (f[tgt][a] != 0 && tgt != b) {
                    int lo = std::min(tgt, b), hi = std::max(tgt, b);
                    Rational s = (tgt < b) ? f[tgt][a] : -f[tgt][a];
                    w[pidx[{lo, hi}]][pidx[{a, b}]] += s;
                }
                if (f[tgt][b] != 0 && tgt != a) {
                    int lo = std::min(a, tgt), hi = std::max(a, tgt);
                    Rational s = (a < tgt) ? f[tgt][b] : -f[tgt][b];
                    w[pidx[{lo, hi}]][pidx[{a, b}]] += s;
                }
            }
        }
        wedge_ops.push_back(std::move(w));
    }

    // symplectic pairing in the chosen basis: Omega(e_i, f_j) = delta_ij
    auto omega = [&](int x, int y) -> long {
        bool xe = x < n, ye = y < n;
        int xi = xe ? x + 1 : n - (x - n);
        int yi = ye ? y + 1 : n - (y - n);
        if (xe && !ye && xi == yi) return 1;
        if (!xe && ye && xi == yi) return -1;
        return 0;
    };
    QVector contraction(d6);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        contraction[i] = omega(pairs[i].first, pairs[i].second);

    // kernel basis: free columns of the 1 x 6 contraction matrix
    int piv = -1;
    for (int i = 0; i < d6; ++i)
        if (contraction[i] != 0) {
            piv = i;
            break;
        }
    QMatrix kernel;  // columns stored as rows here: kernel[c] is a 6-vector
    std::vector<int> free_cols;
    for (int i = 0; i < d6; ++i) {
        if (i == piv) continue;
        QVector v(d6, Rational(0));
        v[i] = 1;
        v[piv] = -contraction[i] / contraction[piv];
        kernel.push_back(std::move(v));
        free_cols.push_back(i);
    }
    int d5 = static_cast<int>(kernel.size());

    // restrict each operator: solve K X = W K column by column via echelon
    // coordinates in the kernel basis (pivot rows = free columns + piv).
    RepModule m;
    m.type = std4.type;
    m.name = "sp(4) primitive wedge";
    m.op_labels = std4.op_labels;
    for (int c = 0; c < d5; ++c) {
        int lead = free_cols[c];
        std::string l = std4.basis_labels[pairs[lead].first] + "^" +
                        std4.basis_labels[pairs[lead].second];
        m.basis_labels.push_back(l);
    }
    // coordinates of a 6-vector in the kernel basis: read off the free
    // columns, then certify the pivot coordinate matches.
    auto kernel_coords = [&](const QVector& w) {
        QVector c(d5);
        for (int k = 0; k < d5; ++k) c[k] = w[free_cols[k]];
        QVector recon(d6, Rational(0));
        for (int k = 0; k < d5; ++k)
            for (int t = 0; t < d6; ++t) recon[t] += c[k] * kernel[k][t];
        if (recon != w)
            throw std::logic_error("sp4 primitive wedge: operator does not preserve the contraction kernel");
        return c;
    };
    for (const QMatrix& w : wedge_ops) {
        QMatrix restr(d5, QVector(d5, Rational(0)));
        for (int c = 0; c < d5; ++c) {
            QVector img = mat_vec(w, kernel[c]);
            QVector coords = kernel_coords(img);
            for (int r = 0; r < d5; ++r) restr[r][c] = coords[r];
        }
        m.ops.push_back(std::move(restr));
    }

    // cyclic vector: e_1 ^ e_2 (a free column; its kernel coordinate vector
    // is a unit vector)
    int target = pidx[{0, 1}];
    int cyc = -1;
    for (int k = 0; k < d5; ++k)
        if (free_cols[k] == target) cyc = k;
    if (cyc < 0) throw std::logic_error("sp4 primitive wedge: highest weight vector not a kernel basis vector");
    m.cyclic_index = cyc;
    return m;
}

}  // namespace

RepModule rep_sp(int n, int omega_index) {
    if (omega_index == 1 && n >= 1 && n <= 3) return sp_standard(n);
    if (omega_index == 2 && n == 2) return sp4_primitive_wedge();
    throw std::invalid_argument("rep_sp: unsupported (n, omega_index) = (" +
                                std::to_string(n) + ", " + std::to_string(omega_index) + ")");
}

RepModule cartan_tensor(const RepModule& m1, const RepModule& m2) {
    if (m1.type.family != m2.type.family || m1.type.rank != m2.type.rank ||
        m1.op_labels != m2.op_labels)
        throw std::invalid_argument("cartan_tensor: modules over different types or orderings");
    int d1 = m1.dim(), d2 = m2.dim(), d = d1 * d2;

    RepModule m;
    m.type = m1.type;
    m.name = m1.name + " (*) " + m2.name;
    m.op_labels = m1.op_labels;
    m.basis_labels.reserve(d);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b)
            m.basis_labels.push_back(m1.basis_labels[a] + "*" + m2.basis_labels[b]);
    m.cyclic_index = m1.cyclic_index * d2 + m2.cyclic_index;

    for (int i = 0; i < m1.num_ops(); ++i) {
        QMatrix f(d, QVector(d, Rational(0)));
        const QMatrix& a = m1.ops[i];
        const QMatrix& b = m2.ops[i];
        for (int r = 0; r < d1; ++r)
            for (int c = 0; c < d1; ++c) {
                if (a[r][c] == 0) continue;
                for (int x = 0; x < d2; ++x) f[r * d2 + x][c * d2 + x] += a[r][c];
            }
        for (int x = 0; x < d2; ++x)
            for (int y = 0; y < d2; ++y) {
                if (b[x][y] == 0) continue;
                for (int r = 0; r < d1; ++r) f[r * d2 + x][r * d2 + y] += b[x][y];
            }
        m.ops.push_back(std::move(f));
    }
    return m;
}

RepModule restrict_generators(const RepModule& m, const std::vector<int>& positions) {
    RepModule r;
    r.type = m.type;
    r.name = m.name + " [restricted]";
    r.basis_labels = m.basis_labels;
    r.cyclic_index = m.cyclic_index;
    for (int p : positions) {
        if (p < 0 || p >= m.num_ops())
            throw std::invalid_argument("restrict_generators: position out of range");
        r.op_labels.push_back(m.op_labels[p]);
        r.ops.push_back(m.ops[p]);
    }
    return r;
}

RepModule radical_module_sl(int n, int k) {
    RepModule full = wedge_rep_sl(n, k);
    GoodOrdering ord = default_good_ordering(LieType(Family::A, n));
    std::vector<int> positions;
    for (int p = 0; p < ord.size(); ++p) {
        const PositiveRoot& r = ord.roots[p];
        if (r.a <= k && k <= r.b) positions.push_back(p);
    }
    RepModule m = restrict_generators(full, positions);
    m.name = "wedge(" + std::to_string(n) + "," + std::to_string(k) + ") radical";
    return m;
}

QVector apply_monomial(const RepModule& m, const MultiExponent& p) {
    if (p.size() != m.num_ops())
        throw std::invalid_argument("apply_monomial: exponent length mismatch");
    QVector v = m.cyclic_vector();
    for (int i = m.num_ops() - 1; i >= 0; --i) {
        for (int t = 0; t < p[i]; ++t) {
            v = mat_vec(m.ops[i], v);
            if (is_zero_vector(v)) return v;
        }
    }
    return v;
}

OrbitPolynomial exp_orbit_product(const RepModule& m) {
    int n = m.num_ops();
    std::map<MultiExponent, QVector, MonomialLess> terms;
    terms.emplace(MultiExponent::zero(n), m.cyclic_vector());
    for (int i = n - 1; i >= 0; --i) {
        std::map<MultiExponent, QVector, MonomialLess> next;
        for (const auto& [q, w] : terms) {
            QVector cur = w;
            Integer fact = 1;
            for (int t = 0;; ++t) {
                MultiExponent key = q;
                key[i] += t;
                QVector scaled(cur.size());
                Rational inv_fact(1, fact);
                inv_fact.canonicalize();
                for (std::size_t s = 0; s < cur.size(); ++s) scaled[s] = cur[s] * inv_fact;
                auto [it, inserted] = next.emplace(key, scaled);
                if (!inserted)
                    for (std::size_t s = 0; s < cur.size(); ++s) it->second[s] += scaled[s];
                cur = mat_vec(m.ops[i], cur);
                if (is_zero_vector(cur)) break;
                fact *= (t + 1);
            }
        }
        terms = std::move(next);
    }
    OrbitPolynomial poly;
    for (auto& [q, w] : terms)
        if (!is_zero_vector(w)) poly.terms.emplace(q, std::move(w));
    return poly;
}

OrbitPolynomial exp_orbit_sum(const RepModule& m) {
    int n = m.num_ops();
    OrbitPolynomial poly;
    std::map<MultiExponent, QVector, MonomialLess> level;
    level.emplace(MultiExponent::zero(n), m.cyclic_vector());
    Integer fact = 1;
    for (int k = 0; !level.empty(); ++k) {
        // any word of length dim(M) kills v in a weight-graded nilpotent module
        if (k > m.dim())
            throw std::invalid_argument("exp_orbit_sum: operator sum is not nilpotent");
        if (k > 0) fact *= k;
        Rational inv_fact(1, fact);
        inv_fact.canonicalize();
        for (const auto& [q, w] : level) {
            QVector scaled(w.size());
            for (std::size_t s = 0; s < w.size(); ++s) scaled[s] = w[s] * inv_fact;
            auto [it, inserted] = poly.terms.emplace(q, scaled);
            if (!inserted)
                for (std::size_t s = 0; s < w.size(); ++s) it->second[s] += scaled[s];
        }
        // next power: (sum z_i F_i) applied to each term
        std::map<MultiExponent, QVector, MonomialLess> next;
        for (const auto& [q, w] : level) {
            for (int i = 0; i < n; ++i) {
                QVector img = mat_vec(m.ops[i], w);
                if (is_zero_vector(img)) continue;
                MultiExponent key = q;
                key[i] += 1;
                auto [it, inserted] = next.emplace(key, img);
                if (!inserted)
                    for (std::size_t s = 0; s < img.size(); ++s) it->second[s] += img[s];
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = is_zero_vector(it->second) ? next.erase(it) : std::next(it);
        level = std::move(next);
    }
    for (auto it = poly.terms.begin(); it != poly.terms.end();)
        it = is_zero_vector(it->second) ? poly.terms.erase(it) : std::next(it);
    return poly;
}

RepModule module_for_weight(LieType t, const Weight& lambda) {
    if (lambda.size() != t.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight must be dominant");

    std::vector<RepModule> factors;
    if (t.family == Family::A) {
        for (int k = 1; k <= t.rank; ++k)
            for (long c = 0; c < lambda[k - 1]; ++c) factors.push_back(wedge_rep_sl(t.rank, k));
    } else if (t.family == Family::C) {
        bool ok = (t.rank == 2) ||
                  (t.rank <= 3 && lambda.total() == lambda[0]);  // omega_1 multiples only for n=3
        if (!ok)
            throw std::invalid_argument("no oracle module for type C rank " +
                                        std::to_string(t.rank) + " weight " + lambda.str());
        for (int k = 1; k <= t.rank; ++k)
            for (long c = 0; c < lambda[k - 1]; ++c) factors.push_back(rep_sp(t.rank, k));
    } else {
        throw std::invalid_argument("no oracle-side module construction for G2");
    }

    if (factors.empty()) return trivial_module(t);
    RepModule m = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) m = cartan_tensor(m, factors[i]);
    return m;
}

}  // namespace favmod
