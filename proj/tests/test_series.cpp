#include <vertexforge/ratfun.hpp>
#include <vertexforge/series.hpp>

#include "vendor_doctest.hpp"

using namespace vertexforge;

namespace {

RSeries poly_series(const std::string& expr) {
    RationalFunction r = rf_parse(expr);
    REQUIRE(r.is_polynomial());
    return poly_to_series(r.num);
}

Rational coeff_at(const RSeries& s, std::initializer_list<int> es) {
    Expo e;
    e.n = static_cast<std::uint8_t>(s.vars.size());
    std::size_t i = 0;
    for (int v : es) e[i++] = v;
    auto c = s.at(e);
    REQUIRE(c.has_value());
    return *c;
}

Rational at1(const RSeries& s, int e0) { return coeff_at(s, {e0}); }
Rational at2(const RSeries& s, int e0, int e1) { return coeff_at(s, {e0, e1}); }
Rational at3(const RSeries& s, int e0, int e1, int e2) { return coeff_at(s, {e0, e1, e2}); }

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-4/2")) == "-2");
    CHECK(rat_str(rat_parse("7")) == "7");
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("x"));
    CHECK(rat_str(binomial(-1, 3)) == "-1");
    CHECK(rat_str(binomial(-2, 2)) == "3");
    CHECK(rat_str(binomial(4, 2)) == "6");
}

TEST_CASE("polynomial product (1+x)(1-x)") {
    RSeries a = poly_series("1+x");
    RSeries b = poly_series("1-x");
    RSeries p = series_mul(a, b);
    CHECK(coeff_at(p, {0}) == Rational(1));
    CHECK(coeff_at(p, {1}) == Rational(0));
    CHECK(coeff_at(p, {2}) == Rational(-1));
    CHECK(coeff_at(p, {10}) == Rational(0));  // exact product, known everywhere
}

TEST_CASE("(x1 - x2) * delta telescopes to zero") {
    RSeries d = delta_pair(Var::x1, Var::x2, Iv{-5, 5}, Iv{-5, 5});
    RSeries p = poly_series("x1-x2");
    RSeries prod = series_mul(p, d);
    // guarantee shrinks by the clearing polynomial's support
    for (const auto& [e, c] : prod.coeff) CHECK(is_zero(c));
    CHECK(prod.coeff.empty());
    Expo probe;
    probe.n = 2;
    probe[0] = 0;
    probe[1] = -1;
    Rational v = *prod.at(probe);
    CHECK(is_zero(v));
    // outside the shrunk guarantee: unknown
    probe[0] = 5;
    probe[1] = -6;
    CHECK_FALSE(prod.at(probe).has_value());
}

TEST_CASE("window propagation rule for truncated factors") {
    // a known on [-2,3] with lower support bound -2, b known on [0,4] with bound 0
    RSeries a = series_zero({Var::x});
    a.win[0] = Iv{-2, 3};
    a.box[0] = Iv{-2, kPosInf};
    RSeries b = series_zero({Var::x});
    b.win[0] = Iv{0, 4};
    b.box[0] = Iv{0, kPosInf};
    Iv w = mul_window_1d(a.win[0], a.box[0], b.win[0], b.box[0]);
    CHECK(w.hi == 2);  // min(-2+4, 0+3)
    CHECK(w.lo == kNegInf);
    CHECK(sum(a.box[0], b.box[0]).lo == -2);
}

TEST_CASE("taylor shift") {
    RSeries x2 = poly_series("x^2");
    RSeries s = taylor_shift(x2, Var::x, Var::x0, {Iv{-4, 4}, Iv{0, 4}});
    CHECK(coeff_at(s, {2, 0}) == Rational(1));
    CHECK(coeff_at(s, {1, 1}) == Rational(2));
    CHECK(coeff_at(s, {0, 2}) == Rational(1));
    CHECK(coeff_at(s, {0, 3}) == Rational(0));

    RationalFunction inv = rf_parse("1/x");
    RSeries xm1 = iota_expand_uni(inv, Var::x, Point::zero, Iv{-1, 8});
    RSeries sh = taylor_shift(xm1, Var::x, Var::x0, {Iv{-8, -1}, Iv{0, 3}});
    // x^{-1} -> sum_l (-1)^l x0^l x^{-l-1}
    CHECK(coeff_at(sh, {-1, 0}) == Rational(1));
    CHECK(coeff_at(sh, {-2, 1}) == Rational(-1));
    CHECK(coeff_at(sh, {-3, 2}) == Rational(1));
    CHECK(coeff_at(sh, {-4, 3}) == Rational(-1));
    CHECK(coeff_at(sh, {-2, 0}) == Rational(0));
}

TEST_CASE("formal residue") {
    RationalFunction inv = rf_parse("1/x");
    RSeries xm1 = iota_expand_uni(inv, Var::x, Point::zero, Iv{-1, 5});
    RSeries r = series_residue(xm1, Var::x, {});
    Expo none;
    Rational v0 = *r.at(none);
    CHECK(v0 == Rational(1));

    // Res_{x1} iota_{x1,x2} 1/(x1-x2) = 1
    RationalFunction f = rf_parse("1/(x1-x2)");
    RSeries s = iota_expand(f, ExpansionDomain::pair(Var::x1, Point::zero, Var::x2),
                            {Iv{-8, 2}, Iv{0, 6}});
    RSeries res = series_residue(s, Var::x1, {Iv{0, 4}});
    CHECK(at1(res, 0) == Rational(1));
    CHECK(at1(res, 1) == Rational(0));
}

TEST_CASE("residue of derivative vanishes") {
    RationalFunction f = rf_parse("(1+x)/(x^3*(2-x))");
    RSeries s = iota_expand_uni(f, Var::x, Point::zero, Iv{-3, 9});
    RSeries ds = series_derivative(s, Var::x);
    RSeries r = series_residue(ds, Var::x, {});
    Expo none;
    Rational v0 = *r.at(none);
    CHECK(is_zero(v0));
}

TEST_CASE("delta kernel coefficients") {
    // two_var: coefficient of x2^3 x1^{-4} in sum_n x2^n x1^{-n-1} ... the
    // spec names the pair (x2 @ exponent n, x1 @ -n-1)
    RSeries d = delta_pair(Var::x2, Var::x1, Iv{-5, 5}, Iv{-5, 5});
    CHECK(at2(d, -4, 3) == Rational(1));  // x1 exponent -4, x2 exponent 3

    RSeries k = delta_kernel(DeltaKind::jacobi_lhs1, Iv{-3, 3}, Iv{-3, 3}, Iv{-3, 3});
    CHECK(at3(k, -1, 0, 0) == Rational(1));  // x0^{-1} x1^0 x2^0 -> n=0 term
}

TEST_CASE("three-term delta identity on a window") {
    Iv w{-6, 6};
    RSeries a = delta_kernel(DeltaKind::jacobi_lhs1, w, w, w);
    RSeries b = delta_kernel(DeltaKind::jacobi_lhs2, w, w, w);
    RSeries c = delta_kernel(DeltaKind::jacobi_rhs, w, w, w);
    RSeries lhs = series_sub(a, b);
    auto bad = series_compare(lhs, c, {Var::x0, Var::x1, Var::x2}, {w, w, w});
    if (bad) {
        CAPTURE(bad->at.str());
        CAPTURE(bad->lhs);
        CAPTURE(bad->rhs);
        CHECK(false);
    }
}

TEST_CASE("iota geometric series and expansion at infinity") {
    RSeries g = iota_expand_uni(rf_parse("1/(1-x)"), Var::x, Point::zero, Iv{0, 5});
    for (int i = 0; i <= 5; ++i) CHECK(at1(g, i) == Rational(1));
    RSeries h = iota_expand_uni(rf_parse("1/(x-1)"), Var::x, Point::infinity, Iv{-6, -1});
    for (int i = -6; i <= -1; ++i) CHECK(at1(h, i) == Rational(1));
    CHECK(at1(h, 0) == Rational(0));  // bounded above: known zero
}

TEST_CASE("iota self-consistency q * iota(1/q) = 1") {
    RationalFunction q = rf_parse("x^2*(2+x)");
    RSeries inv = iota_expand_uni(rf_inv(q), Var::x, Point::zero, Iv{-2, 9});
    RSeries prod = series_mul(poly_to_series(q.num), inv);
    RSeries one = series_const(Rational(1));
    auto bad = series_compare(prod, one, {Var::x}, {Iv{-2, 6}});
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("iota pair-at-zero of diagonal pole") {
    RationalFunction f = rf_parse("1/(x1-x2)");
    RSeries s = iota_expand(f, ExpansionDomain::pair(Var::x1, Point::zero, Var::x2),
                            {Iv{-8, 8}, Iv{0, 7}});
    for (int k = 0; k <= 7; ++k) CHECK(at2(s, -k - 1, k) == Rational(1));
    for (int k = 0; k <= 6; ++k) CHECK(at2(s, -k - 2, k) == Rational(0));
}

TEST_CASE("iota pair delta recovers the two-variable delta") {
    RSeries d = iota_pair_delta(rf_parse("1/(x1-x2)"), Iv{-8, 8}, Iv{-8, 8});
    RSeries expect = delta_pair(Var::x2, Var::x1, Iv{-8, 8}, Iv{-8, 8});
    auto bad = series_compare(d, expect, {Var::x1, Var::x2}, {Iv{-8, 8}, Iv{-8, 8}});
    CHECK_FALSE(bad.has_value());
    CHECK_THROWS(iota_pair_delta(rf_parse("1/(x1+x2)"), Iv{-2, 2}, Iv{-2, 2}));
    RSeries z = iota_pair_delta(rf_parse("x1*x2+3"), Iv{-4, 4}, Iv{-4, 4});
    CHECK(z.coeff.empty());
}

TEST_CASE("precision soundness: restriction of a larger window agrees") {
    RationalFunction f = rf_parse("(1+x)/(1-x-x^2)");
    RSeries small = iota_expand_uni(f, Var::x, Point::zero, Iv{0, 6});
    RSeries big = iota_expand_uni(f, Var::x, Point::zero, Iv{0, 14});
    auto bad = series_compare(small, big, {Var::x}, {Iv{0, 6}});
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("series json serialization") {
    RSeries s = poly_series("1+2*x");
    CHECK(series_json(s) == "[[[0],\"1\"],[[1],\"2\"]]");
}
