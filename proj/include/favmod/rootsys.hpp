#ifndef FAVMOD_ROOTSYS_HPP
#define FAVMOD_ROOTSYS_HPP

#include <optional>
#include <string>
#include <vector>

#include "favmod/rational.hpp"

namespace favmod {

enum class Family { A, C, G2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // "A", "C", "G2"

struct LieType {
    Family family;
    int rank;

    LieType(Family f, int r);  // validates; G2 forces rank 2
    int num_positive_roots() const;
    std::string name() const;  // "A3", "C2", "G2"
};

// A positive root together with its coordinates on the simple roots.
//
//   type A : a = i, b = j for alpha_{i,j} = alpha_i + ... + alpha_j
//   type C : a = i, b = column in the alphabet 1 < ... < n < (n-1)bar < ... < 1bar,
//            encoded as 1..2n-1 with column n+t meaning (n-t)bar; column n is the
//            identified root alpha_{i,n} = alpha_{i,nbar}
//   type G2: a = k (1..6), b unused
struct PositiveRoot {
    Family family = Family::A;
    int a = 0;
    int b = 0;
    std::vector<int> coords;  // simple-root coordinates
    std::string label;        // "a[1,3]", "a[2,1bar]", "b[4]"

    bool operator==(const PositiveRoot& o) const {
        return family == o.family && a == o.a && b == o.b;
    }
};

/// x strictly dominates y: x - y is a nonzero nonnegative combination of
/// simple roots.
bool dominates(const PositiveRoot& x, const PositiveRoot& y);

/// Complete duplicate-free list of positive roots, in a fixed canonical
/// order (row-major; the identified type-C root alpha_{i,n} appears once).
std::vector<PositiveRoot> positive_roots(LieType t);

// An ordering beta_1, ..., beta_N of the positive roots; positions are the
// coordinate indices of every MultiExponent and every polytope.
struct GoodOrdering {
    LieType type;
    std::vector<PositiveRoot> roots;

    int size() const { return static_cast<int>(roots.size()); }
    std::vector<std::string> labels() const;
    /// Position of a root given by its (a, b) key; -1 if absent.
    int position_of(int a, int b) const;
};

/// The default ordering: larger roots first, blocks as in the classical
/// constructions (A: by descending length, then ascending start row;
/// C: barred blocks ascending, then unbarred blocks descending; G2: b1..b6).
GoodOrdering default_good_ordering(LieType t);

/// True iff beta_i > beta_j in dominance implies i < j. On failure, if
/// `violation` is non-null it receives a description of the first violating
/// pair. Throws std::invalid_argument if `o` is not a permutation of the
/// positive roots.
bool validate_good_ordering(const GoodOrdering& o, std::string* violation = nullptr);

// Exponent vector p in Z^N_{>=0}, indexed by good-ordering position.
struct MultiExponent {
    std::vector<int> v;

    MultiExponent() = default;
    explicit MultiExponent(std::vector<int> entries) : v(std::move(entries)) {}
    static MultiExponent zero(int n) { return MultiExponent(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(v.size()); }
    int degree() const;
    int operator[](int i) const { return v[i]; }
    int& operator[](int i) { return v[i]; }
    bool operator==(const MultiExponent& o) const { return v == o.v; }
    bool is_zero() const { return degree() == 0; }

    MultiExponent operator+(const MultiExponent& o) const;
    /// componentwise p <= q
    bool divides(const MultiExponent& q) const;
    std::string str() const;  // "(1,0,0,1)"
};

/// Homogeneous (graded) reverse lexicographic order: total degree first;
/// ties broken so that p > q iff the last nonzero entry of p - q is
/// negative. Returns -1, 0, +1. Throws std::invalid_argument on length
/// mismatch.
int monomial_compare(const MultiExponent& p, const MultiExponent& q);

struct MonomialLess {
    bool operator()(const MultiExponent& p, const MultiExponent& q) const {
        return monomial_compare(p, q) < 0;
    }
};

/// All exponents of the given total degree, sorted increasing.
std::vector<MultiExponent> exponents_of_degree(int n, int degree);

/// Streams every p with degree() <= max_degree exactly once, strictly
/// increasing under monomial_compare. Single consumer.
class MultiExponentStream {
public:
    MultiExponentStream(int n, int max_degree);
    bool next(MultiExponent& out);

private:
    int n_, max_degree_, degree_;
    std::size_t index_;
    std::vector<MultiExponent> level_;
    void load_level();
};

// Dominant integral weight; coefficients on the fundamental weights.
// For G2 the convention is (k, l) = (m1, m2).
struct Weight {
    std::vector<long> m;

    Weight() = default;
    explicit Weight(std::vector<long> coeffs) : m(std::move(coeffs)) {}
    int size() const { return static_cast<int>(m.size()); }
    long operator[](int i) const { return m[i]; }
    bool is_dominant() const;
    long total() const;
    Weight operator+(const Weight& o) const;
    std::string str() const;  // "(1,0,1)"
};

/// dim V(lambda) by the Weyl product formula over positive coroots, exact.
/// Throws std::invalid_argument if a coefficient is negative or the length
/// does not match the rank.
Integer weyl_dim(LieType t, const Weight& lambda);

}  // namespace favmod

#endif
