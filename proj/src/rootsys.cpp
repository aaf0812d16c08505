#include "favmod/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace favmod {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::G2: return "G2";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "C" || s == "c") return Family::C;
    if (s == "G2" || s == "g2" || s == "G") return Family::G2;
    throw std::invalid_argument("unknown Lie type '" + s + "' (expected A, C or G2)");
}

LieType::LieType(Family f, int r) : family(f), rank(r) {
    if (f == Family::G2) {
        if (r != 2) throw std::invalid_argument("G2 has rank 2");
    } else if (r < 1) {
        throw std::invalid_argument("rank must be >= 1");
    }
}

int LieType::num_positive_roots() const {
    switch (family) {
        case Family::A: return rank * (rank + 1) / 2;
        case Family::C: return rank * rank;
        case Family::G2: return 6;
    }
    return 0;
}

std::string LieType::name() const {
    if (family == Family::G2) return "G2";
    return family_name(family) + std::to_string(rank);
}

namespace {

PositiveRoot make_root_A(int n, int i, int j) {
    PositiveRoot r;
    r.family = Family::A;
    r.a = i;
    r.b = j;
    r.coords.assign(n, 0);
    for (int k = i; k <= j; ++k) r.coords[k - 1] = 1;
    r.label = "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
    return r;
}

// col <= n: alpha_{i,col}; col = n+t: alpha_{i,(n-t)bar}.
PositiveRoot make_root_C(int n, int i, int col) {
    PositiveRoot r;
    r.family = Family::C;
    r.a = i;
    r.b = col;
    r.coords.assign(n, 0);
    if (col <= n) {
        for (int k = i; k <= col; ++k) r.coords[k - 1] = 1;
        r.label = "a[" + std::to_string(i) + "," + std::to_string(col) + "]";
    } else {
        int j = 2 * n - col;  // barred index, 1 <= j <= n-1
        // alpha_i + ... + alpha_n + alpha_{n-1} + ... + alpha_j
        for (int k = i; k <= n; ++k) r.coords[k - 1] += 1;
        for (int k = j; k <= n - 1; ++k) r.coords[k - 1] += 1;
        r.label = "a[" + std::to_string(i) + "," + std::to_string(j) + "bar]";
    }
    return r;
}

const int kG2Coords[6][2] = {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}, {1, 0}};

PositiveRoot make_root_G2(int k) {
    PositiveRoot r;
    r.family = Family::G2;
    r.a = k;
    r.b = 0;
    r.coords = {kG2Coords[k - 1][0], kG2Coords[k - 1][1]};
    r.label = "b[" + std::to_string(k) + "]";
    return r;
}

}  // namespace

bool dominates(const PositiveRoot& x, const PositiveRoot& y) {
    if (x.coords == y.coords) return false;
    for (std::size_t k = 0; k < x.coords.size(); ++k)
        if (x.coords[k] < y.coords[k]) return false;
    return true;
}

std::vector<PositiveRoot> positive_roots(LieType t) {
    std::vector<PositiveRoot> out;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= t.rank; ++i)
                for (int j = i; j <= t.rank; ++j) out.push_back(make_root_A(t.rank, i, j));
            break;
        case Family::C:
            for (int i = 1; i <= t.rank; ++i)
                for (int col = i; col <= 2 * t.rank - i; ++col)
                    out.push_back(make_root_C(t.rank, i, col));
            break;
        case Family::G2:
            for (int k = 1; k <= 6; ++k) out.push_back(make_root_G2(k));
            break;
    }
    return out;
}

std::vector<std::string> GoodOrdering::labels() const {
    std::vector<std::string> out;
    out.reserve(roots.size());
    for (const PositiveRoot& r : roots) out.push_back(r.label);
    return out;
}

int GoodOrdering::position_of(int a, int b) const {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k].a == a && roots[k].b == b) return static_cast<int>(k);
    return -1;
}

GoodOrdering default_good_ordering(LieType t) {
    GoodOrdering o{t, {}};
    int n = t.rank;
    switch (t.family) {
        case Family::A:
            // alpha_{1,n}; alpha_{1,n-1}, alpha_{2,n}; ...; alpha_1, ..., alpha_n
            for (int d = n - 1; d >= 0; --d)
                for (int i = 1; i + d <= n; ++i) o.roots.push_back(make_root_A(n, i, i + d));
            break;
        case Family::C:
            // barred blocks alpha_{1,jbar},...,alpha_{j,jbar} for j = 1..n
            // (j = n is the identified column), then unbarred blocks for
            // j = n-1 down to 1.
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= j; ++i) o.roots.push_back(make_root_C(n, i, 2 * n - j));
            for (int j = n - 1; j >= 1; --j)
                for (int i = 1; i <= j; ++i) o.roots.push_back(make_root_C(n, i, j));
            break;
        case Family::G2:
            for (int k = 1; k <= 6; ++k) o.roots.push_back(make_root_G2(k));
            break;
    }
    return o;
}

bool validate_good_ordering(const GoodOrdering& o, std::string* violation) {
    std::vector<PositiveRoot> all = positive_roots(o.type);
    if (all.size() != o.roots.size())
        throw std::invalid_argument("ordering is not a permutation of the positive roots (size)");
    auto key = [](const PositiveRoot& r) { return std::pair<int, int>(r.a, r.b); };
    std::vector<std::pair<int, int>> ka, kb;
    for (const PositiveRoot& r : all) ka.push_back(key(r));
    for (const PositiveRoot& r : o.roots) kb.push_back(key(r));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb)
        throw std::invalid_argument("ordering is not a permutation of the positive roots");

    for (std::size_t later = 0; later < o.roots.size(); ++later) {
        for (std::size_t earlier = 0; earlier < later; ++earlier) {
            if (dominates(o.roots[later], o.roots[earlier])) {
                if (violation) {
                    *violation = o.roots[later].label + " (position " +
                                 std::to_string(later + 1) + ") dominates " +
                                 o.roots[earlier].label + " (position " +
                                 std::to_string(earlier + 1) + ")";
                }
                return false;
            }
        }
    }
    return true;
}

int MultiExponent::degree() const {
    return std::accumulate(v.begin(), v.end(), 0);
}

MultiExponent MultiExponent::operator+(const MultiExponent& o) const {
    if (v.size() != o.v.size()) throw std::invalid_argument("exponent length mismatch");
    MultiExponent r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
}

bool MultiExponent::divides(const MultiExponent& q) const {
    if (v.size() != q.v.size()) throw std::invalid_argument("exponent length mismatch");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > q.v[i]) return false;
    return true;
}

std::string MultiExponent::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

int monomial_compare(const MultiExponent& p, const MultiExponent& q) {
    if (p.size() != q.size()) throw std::invalid_argument("exponent length mismatch");
    int dp = p.degree(), dq = q.degree();
    if (dp != dq) return dp < dq ? -1 : 1;
    for (int i = p.size() - 1; i >= 0; --i) {
        int d = p.v[i] - q.v[i];
        if (d != 0) return d > 0 ? -1 : 1;  // last nonzero of p-q positive => p < q
    }
    return 0;
}

namespace {

void compositions(int n, int degree, std::vector<int>& cur, int pos,
                  std::vector<MultiExponent>& out) {
    if (pos == n - 1) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int x = 0; x <= degree; ++x) {
        cur[pos] = x;
        compositions(n, degree - x, cur, pos + 1, out);
    }
}

}  // namespace

std::vector<MultiExponent> exponents_of_degree(int n, int degree) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<MultiExponent> out;
    std::vector<int> cur(n, 0);
    compositions(n, degree, cur, 0, out);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

MultiExponentStream::MultiExponentStream(int n, int max_degree)
    : n_(n), max_degree_(max_degree), degree_(0), index_(0) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    load_level();
}

void MultiExponentStream::load_level() {
    level_ = degree_ <= max_degree_ ? exponents_of_degree(n_, degree_)
                                    : std::vector<MultiExponent>{};
    index_ = 0;
}

bool MultiExponentStream::next(MultiExponent& out) {
    while (index_ >= level_.size()) {
        if (degree_ >= max_degree_) return false;
        ++degree_;
        load_level();
    }
    out = level_[index_++];
    return true;
}

bool Weight::is_dominant() const {
    for (long x : m)
        if (x < 0) return false;
    return true;
}

long Weight::total() const { return std::accumulate(m.begin(), m.end(), 0L); }

Weight Weight::operator+(const Weight& o) const {
    if (m.size() != o.m.size()) throw std::invalid_argument("weight length mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
    return os.str();
}

Integer weyl_dim(LieType t, const Weight& lambda) {
    if (lambda.size() != t.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight must be dominant (all coefficients >= 0)");

    // Halved squared lengths of the simple roots; only ratios matter.
    std::vector<long> d(t.rank, 1);
    if (t.family == Family::C) d[t.rank - 1] = 2;
    if (t.family == Family::G2) d = {1, 3};

    // <mu, beta^vee> is proportional to sum_j c_j mu_j d_j with the same
    // root-dependent denominator for lambda+rho and rho, so it cancels.
    Integer num = 1, den = 1;
    for (const PositiveRoot& beta : positive_roots(t)) {
        long s1 = 0, s0 = 0;
        for (int j = 0; j < t.rank; ++j) {
            s1 += static_cast<long>(beta.coords[j]) * (lambda[j] + 1) * d[j];
            s0 += static_cast<long>(beta.coords[j]) * d[j];
        }
        num *= s1;
        den *= s0;
    }
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("weyl_dim: non-exact division");
    return q;
}

}  // namespace favmod
