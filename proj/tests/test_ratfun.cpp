#include <vertexforge/qyb.hpp>
#include <vertexforge/ratfun.hpp>

#include <random>

#include "vendor_doctest.hpp"

using namespace vertexforge;

namespace {

// deterministic random rational functions for property tests
struct Rng {
    std::mt19937 gen{12345};
    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    }
    Poly rand_poly(const std::vector<Var>& vars, int maxdeg, bool nonzero) {
        Poly p = Poly::zero();
        for (int t = 0; t < 4; ++t) {
            Expo e;
            e.n = static_cast<std::uint8_t>(vars.size());
            int total = 0;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                e[i] = static_cast<std::int32_t>(pick(0, maxdeg - total));
                total += e[i];
            }
            p = poly_add(p, Poly::monomial(vars, e, Rational(pick(-4, 4))));
        }
        if (nonzero && p.is_zero()) p = Poly::constant(Rational(1 + pick(0, 3)));
        return p;
    }
};

}  // namespace

TEST_CASE("poly gcd and rational normalization") {
    RationalFunction r = rf_parse("(x^2-1)/(x-1)");
    CHECK(r.is_polynomial());
    CHECK(rf_equal(r, rf_parse("x+1")));

    RationalFunction s = rf_parse("(x1^2-x2^2)/(x1-x2)");
    CHECK(rf_equal(s, rf_parse("x1+x2")));

    RationalFunction t = rf_parse("(l + x1 - x2)/(l - x1 + x2)", {{"l", Rational(1)}});
    CHECK(rf_equal(rf_mul(t, rf_inv(t)), rf_parse("1")));
}

TEST_CASE("parser errors") {
    CHECK_THROWS(rf_parse("1/(1-x"));
    CHECK_THROWS(rf_parse("y+1"));
    CHECK_THROWS(rf_parse("x+"));
    CHECK(rf_equal(rf_parse("x^-2"), rf_parse("1/x^2")));
    CHECK(rf_equal(rf_parse("-x^2"), rf_neg(rf_parse("x^2"))));
}

TEST_CASE("iota is a ring morphism (randomized)") {
    Rng rng;
    std::vector<ExpansionDomain> domains = {
        ExpansionDomain::univar(Var::x, Point::zero),
        ExpansionDomain::univar(Var::x, Point::infinity),
        ExpansionDomain::pair(Var::x1, Point::zero, Var::x2),
        ExpansionDomain::pair(Var::x, Point::infinity, Var::x0),
    };
    for (const ExpansionDomain& dom : domains) {
        std::vector<Var> vars;
        for (auto& [v, p] : dom.at) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        std::vector<Iv> want(vars.size(), Iv{-7, 7});
        std::vector<Iv> probe(vars.size(), Iv{-4, 4});
        for (int trial = 0; trial < 6; ++trial) {
            Poly pn = rng.rand_poly(vars, 3, false);
            Poly pd = rng.rand_poly(vars, 3, true);
            Poly qn = rng.rand_poly(vars, 3, false);
            Poly qd = rng.rand_poly(vars, 3, true);
            RationalFunction r = rf_normalize(pn, pd);
            RationalFunction s = rf_normalize(qn, qd);
            RSeries ir = iota_expand(r, dom, want);
            RSeries is = iota_expand(s, dom, want);
            // additivity
            RSeries lhs = series_add(ir, is);
            RSeries rhs = iota_expand(rf_add(r, s), dom, want);
            auto bad = series_compare(lhs, rhs, vars, probe);
            CHECK_FALSE(bad.has_value());
            // multiplicativity
            RSeries prod = series_mul(ir, is);
            RSeries both = iota_expand(rf_mul(r, s), dom, want);
            bad = series_compare(prod, both, vars, probe);
            CHECK_FALSE(bad.has_value());
            // q * iota(1/q) = 1
            RSeries inv = iota_expand(rf_inv(s), dom, want);
            RSeries unit = series_mul(iota_expand(s, dom, want), inv);
            bad = series_compare(unit, series_const(Rational(1)), vars, probe);
            CHECK_FALSE(bad.has_value());
        }
    }
}

TEST_CASE("iota preserves polynomials in every domain") {
    RationalFunction p = rf_parse("2 + x1*x2 - 3*x2^2");
    RSeries s = iota_expand(p, ExpansionDomain::pair(Var::x1, Point::zero, Var::x2),
                            {Iv{-5, 5}, Iv{-5, 5}});
    auto bad = series_compare(s, poly_to_series(p.num), {Var::x1, Var::x2},
                              {Iv{-5, 5}, Iv{-5, 5}});
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("qyb: identity passes") {
    QYBMatrix s = QYBMatrix::identity(2);
    QybReport rep = qyb_check(s);
    CHECK(rep.unitarity);
    CHECK(rep.ybe);
}

TEST_CASE("qyb: diagonal unitary family passes, perturbed entry fails") {
    // q_{ij}(x) q_{ji}(-x) = 1 with q_ij = f_ij(x) f_ji(-x)^{-1}
    std::map<std::string, Rational> env{{"l", Rational(1)}};
    RationalFunction quu = rf_parse("(l-x)/(l+x)", env);
    RationalFunction quv = rf_parse("(l+x)/(l-x)", env);
    QYBMatrix s = QYBMatrix::identity(2);
    auto idx = [](int i, int j) { return i * 2 + j; };
    s.entries[idx(0, 0)][idx(0, 0)] = quu;
    s.entries[idx(0, 1)][idx(0, 1)] = quv;
    s.entries[idx(1, 0)][idx(1, 0)] = quv;
    s.entries[idx(1, 1)][idx(1, 1)] = quu;
    QybReport rep = qyb_check(s);
    CHECK(rep.unitarity);
    CHECK(rep.ybe);

    s.entries[idx(0, 1)][idx(0, 1)] = rf_parse("1+x");
    QybReport bad = qyb_check(s, "unitarity");
    CHECK_FALSE(bad.unitarity);
    CHECK(bad.witness.has_value());
}

TEST_CASE("qyb: factorization property") {
    // random f_ij with f_ij(0) != 0 gives a unitary diagonal matrix
    Rng rng;
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<std::vector<RationalFunction>> f(2, std::vector<RationalFunction>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Poly p = rng.rand_poly({Var::x}, 2, true);
                if (is_zero(rf_eval(RationalFunction::from_poly(p), {{Var::x, Rational(0)}})))
                    p = poly_add(p, Poly::constant(Rational(1)));
                f[i][j] = RationalFunction::from_poly(p);
            }
        Poly minus_x = poly_neg(Poly::variable(Var::x));
        QYBMatrix s = QYBMatrix::identity(2);
        auto idx = [](int i, int j) { return i * 2 + j; };
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                s.entries[idx(i, j)][idx(i, j)] =
                    rf_div(f[i][j], rf_subst(f[j][i], Var::x, minus_x));
        QybReport rep = qyb_check(s);
        CHECK(rep.unitarity);
        CHECK(rep.ybe);
    }
}
