#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "favmod/essential.hpp"
#include "favmod/repmod.hpp"

using namespace favmod;

namespace {

MultiExponent me(std::vector<int> v) { return MultiExponent(std::move(v)); }

bool is_zero_matrix(const QMatrix& m) {
    for (const QVector& row : m)
        for (const Rational& x : row)
            if (x != 0) return false;
    return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
    QMatrix ab = mat_mul(a, b), ba = mat_mul(b, a);
    for (std::size_t r = 0; r < ab.size(); ++r)
        for (std::size_t c = 0; c < ab.size(); ++c) ab[r][c] -= ba[r][c];
    return ab;
}

QMatrix scaled(const QMatrix& a, long s) {
    QMatrix out = a;
    for (QVector& row : out)
        for (Rational& x : row) x *= s;
    return out;
}

int nilpotency_index(const QMatrix& f) {
    QMatrix p = f;
    int k = 1;
    while (!is_zero_matrix(p)) {
        p = mat_mul(p, f);
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("wedge_rep_sl basics") {
    RepModule m = wedge_rep_sl(3, 2);
    CHECK(m.dim() == 6);
    CHECK(m.basis_labels[m.cyclic_index] == "w[1,2]");
    CHECK(m.num_ops() == 6);
    CHECK_THROWS_AS(wedge_rep_sl(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(wedge_rep_sl(3, 0), std::invalid_argument);

    // sl_2 vector representation: F w1 = w2, F w2 = 0
    RepModule v = wedge_rep_sl(1, 1);
    CHECK(v.dim() == 2);
    QVector w1 = v.cyclic_vector();
    QVector w2 = mat_vec(v.ops[0], w1);
    CHECK(w2[1] == 1);
    CHECK(is_zero_vector(mat_vec(v.ops[0], w2)));

    // f_{alpha_{1,3}} = E_{41}: w1 -> w4
    RepModule vec4 = wedge_rep_sl(3, 1);
    GoodOrdering ord = default_good_ordering(LieType(Family::A, 3));
    int pos13 = ord.position_of(1, 3);
    QVector img = mat_vec(vec4.ops[pos13], vec4.cyclic_vector());
    CHECK(img[3] == 1);
}

TEST_CASE("commutation sanity: [F_a, F_b] = +-F_{a+b} or 0 on wedge modules") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
        RepModule m = wedge_rep_sl(n, k);
        GoodOrdering ord = default_good_ordering(LieType(Family::A, n));
        for (int a = 0; a < m.num_ops(); ++a) {
            for (int b = 0; b < m.num_ops(); ++b) {
                if (a == b) continue;
                QMatrix c = commutator(m.ops[a], m.ops[b]);
                // sum of the two roots, as a candidate positive root
                std::vector<int> sum(n);
                for (int t = 0; t < n; ++t)
                    sum[t] = ord.roots[a].coords[t] + ord.roots[b].coords[t];
                int target = -1;
                for (int t = 0; t < ord.size(); ++t)
                    if (ord.roots[t].coords == sum) target = t;
                if (target < 0) {
                    CHECK(is_zero_matrix(c));
                } else {
                    bool plus = c == m.ops[target];
                    bool minus = c == scaled(m.ops[target], -1);
                    bool zero = is_zero_matrix(c);
                    CHECK((plus || minus || zero));
                }
            }
        }
    }
}

TEST_CASE("rep_sp") {
    CHECK(rep_sp(2, 1).dim() == 4);
    CHECK(rep_sp(3, 1).dim() == 6);
    CHECK(rep_sp(2, 2).dim() == 5);  // 6 - 1: contraction has rank 1
    CHECK_THROWS_AS(rep_sp(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(rep_sp(2, 3), std::invalid_argument);

    // all operators are nilpotent
    for (const RepModule& m : {rep_sp(2, 1), rep_sp(2, 2), rep_sp(3, 1)})
        for (const QMatrix& f : m.ops) CHECK(nilpotency_index(f) <= m.dim() + 1);
}

TEST_CASE("cartan_tensor") {
    RepModule v = wedge_rep_sl(1, 1);

    SUBCASE("tensor with the trivial module is the same action") {
        RepModule t = cartan_tensor(v, trivial_module(v.type));
        CHECK(t.dim() == 2);
        for (int i = 0; i < v.num_ops(); ++i) CHECK(t.ops[i] == v.ops[i]);
        CHECK(t.cyclic_index == v.cyclic_index);
    }
    SUBCASE("sl2: V(w1) (*) V(w1) has cyclic span of dimension 3") {
        RepModule t = cartan_tensor(v, v);
        EssentialResult r = essential_set(t, {/*expect_cyclic=*/false});
        CHECK(r.rank() == 3);
    }
    SUBCASE("sl3: V(w1) (*) V(w2) has cyclic span of dimension 8") {
        RepModule t = cartan_tensor(wedge_rep_sl(2, 1), wedge_rep_sl(2, 2));
        EssentialResult r = essential_set(t, {/*expect_cyclic=*/false});
        CHECK(r.rank() == 8);
    }
    SUBCASE("type mismatch") {
        CHECK_THROWS_AS(cartan_tensor(wedge_rep_sl(2, 1), wedge_rep_sl(3, 1)),
                        std::invalid_argument);
    }
    SUBCASE("Leibniz rule for degree-one exponents") {
        RepModule m1 = wedge_rep_sl(2, 1), m2 = wedge_rep_sl(2, 2);
        RepModule t = cartan_tensor(m1, m2);
        for (int i = 0; i < t.num_ops(); ++i) {
            MultiExponent p = MultiExponent::zero(t.num_ops());
            p[i] = 1;
            QVector lhs = apply_monomial(t, p);
            QVector f1 = mat_vec(m1.ops[i], m1.cyclic_vector());
            QVector f2 = mat_vec(m2.ops[i], m2.cyclic_vector());
            QVector rhs(t.dim(), Rational(0));
            for (int a = 0; a < m1.dim(); ++a)
                for (int b = 0; b < m2.dim(); ++b) {
                    rhs[a * m2.dim() + b] +=
                        f1[a] * (b == m2.cyclic_index ? 1 : 0) +
                        (a == m1.cyclic_index ? 1 : 0) * f2[b];
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("apply_monomial") {
    RepModule m = radical_module_sl(3, 2);  // ordered generators f13 > f12 > f23 > f22
    CHECK(m.num_ops() == 4);
    CHECK(apply_monomial(m, me({0, 0, 0, 0})) == m.cyclic_vector());

    // f13 w12 = -w24 (sign depends on the Koszul convention; modulus 1)
    QVector img = apply_monomial(m, me({1, 0, 0, 0}));
    int nonzero = 0, idx = -1;
    for (int t = 0; t < m.dim(); ++t)
        if (img[t] != 0) {
            ++nonzero;
            idx = t;
        }
    CHECK(nonzero == 1);
    CHECK(m.basis_labels[idx] == "w[2,4]");
    CHECK(abs(img[idx]) == 1);

    // every degree-3 monomial in the radical generators annihilates v
    for (const MultiExponent& p : exponents_of_degree(4, 3))
        CHECK(is_zero_vector(apply_monomial(m, p)));

    CHECK_THROWS_AS(apply_monomial(m, me({1, 0})), std::invalid_argument);
}

TEST_CASE("monomials vanish beyond d_max") {
    // d_max = max essential degree; one degree above, everything vanishes
    struct Case {
        RepModule m;
        int d_max;
    };
    std::vector<Case> cases;
    cases.push_back({radical_module_sl(3, 2), 2});
    cases.push_back({wedge_rep_sl(1, 1), 1});
    for (const Case& c : cases) {
        EssentialResult r = essential_set(c.m);
        CHECK(r.d_max == c.d_max);
        for (const MultiExponent& p : exponents_of_degree(c.m.num_ops(), c.d_max + 1))
            CHECK(is_zero_vector(apply_monomial(c.m, p)));
    }
}

TEST_CASE("exp_orbit_product") {
    SUBCASE("trivial module: constant polynomial") {
        OrbitPolynomial o = exp_orbit_product(trivial_module(LieType(Family::A, 2)));
        REQUIRE(o.terms.size() == 1);
        CHECK(o.terms.begin()->first.is_zero());
    }
    SUBCASE("sl2 vector representation: v + u Fv") {
        OrbitPolynomial o = exp_orbit_product(wedge_rep_sl(1, 1));
        REQUIRE(o.terms.size() == 2);
        auto it = o.terms.begin();
        CHECK(it->first == me({0}));
        CHECK(it->second == QVector{Rational(1), Rational(0)});
        ++it;
        CHECK(it->first == me({1}));
        CHECK(it->second == QVector{Rational(0), Rational(1)});
    }
    SUBCASE("coefficient of u^q is F^q v / prod q_i!") {
        RepModule m = radical_module_sl(3, 2);
        OrbitPolynomial o = exp_orbit_product(m);
        for (const auto& [q, w] : o.terms) {
            Integer f = 1;
            for (int i = 0; i < q.size(); ++i) f *= factorial(q[i]);
            QVector expect = apply_monomial(m, q);
            for (Rational& x : expect) {
                x /= Rational(f);
            }
            CHECK(w == expect);
        }
    }
}

TEST_CASE("exp_orbit_sum") {
    SUBCASE("trivial and sl2") {
        CHECK(exp_orbit_sum(trivial_module(LieType(Family::A, 1))).terms.size() == 1);
        OrbitPolynomial o = exp_orbit_sum(wedge_rep_sl(1, 1));
        REQUIRE(o.terms.size() == 2);
        CHECK(o.terms.rbegin()->first == me({1}));
    }
    SUBCASE("abelian generators: coefficient of z^p is v(p) / prod p_i!") {
        RepModule m = radical_module_sl(3, 2);
        // the radical is abelian: operators commute as matrices
        for (int a = 0; a < m.num_ops(); ++a)
            for (int b = 0; b < m.num_ops(); ++b)
                CHECK(mat_mul(m.ops[a], m.ops[b]) == mat_mul(m.ops[b], m.ops[a]));
        OrbitPolynomial o = exp_orbit_sum(m);
        for (const auto& [p, w] : o.terms) {
            Integer f = 1;
            for (int i = 0; i < p.size(); ++i) f *= factorial(p[i]);
            QVector expect = apply_monomial(m, p);
            for (Rational& x : expect) x /= Rational(f);
            CHECK(w == expect);
        }
    }
    SUBCASE("product and sum expansions agree in total degree <= 1") {
        for (const RepModule& m : {wedge_rep_sl(2, 1), rep_sp(2, 1), wedge_rep_sl(3, 2)}) {
            OrbitPolynomial a = exp_orbit_product(m), b = exp_orbit_sum(m);
            for (const auto& [q, w] : a.terms) {
                if (q.degree() > 1) continue;
                REQUIRE(b.terms.count(q) == 1);
                CHECK(b.terms.at(q) == w);
            }
        }
    }
}

TEST_CASE("module_for_weight scope") {
    CHECK(module_for_weight(LieType(Family::A, 2), Weight({2, 1})).dim() == 27);
    CHECK(module_for_weight(LieType(Family::A, 2), Weight({0, 0})).dim() == 1);
    CHECK(module_for_weight(LieType(Family::C, 2), Weight({1, 1})).dim() == 20);
    CHECK(module_for_weight(LieType(Family::C, 3), Weight({1, 0, 0})).dim() == 6);
    CHECK_THROWS_AS(module_for_weight(LieType(Family::C, 3), Weight({0, 1, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(module_for_weight(LieType(Family::G2, 2), Weight({1, 0})),
                    std::invalid_argument);
}
