#include "vertexforge/yangian.hpp"

#include "vertexforge/ratfun.hpp"

namespace vertexforge {

namespace {

// coefficient data for a braiding prefactor g, as carried by ExchangeRule
std::map<std::int64_t, Rational> prefactor_coeffs(const RationalFunction& g, DYConvention conv,
                                                  std::int64_t order) {
    std::map<std::int64_t, Rational> fk;
    if (conv == DYConvention::at_zero) {
        // power series at 0 in s = x2 - x1
        RSeries s = iota_expand_uni(g, Var::x, Point::zero, Iv{0, order});
        for (const auto& [e, c] : s.coeff) {
            if (e[0] < 0) throw std::invalid_argument("dy: prefactor has a pole at 0");
            fk[e[0]] = c;
        }
    } else {
        // expansion at infinity in u = x1 - x2: constant + tail in u^{-k}
        RSeries s = iota_expand_uni(g, Var::x, Point::infinity, Iv{-order, 1});
        for (const auto& [e, c] : s.coeff) {
            if (e[0] > 0)
                throw std::invalid_argument("dy: prefactor grows at infinity; cannot expand");
            fk[-e[0]] = c;  // index k: coefficient of (x1-x2)^{-k}; k = 0 is the swap constant
        }
    }
    return fk;
}

}  // namespace

ExchangeAlgebra dy_mode_relations(const DYPresentation& pres, std::int64_t order) {
    if (is_zero(pres.q)) throw std::invalid_argument("dy: q must be nonzero");
    std::map<std::string, Rational> env{{"l", pres.q}};
    // at_zero, in s = x2 - x1:   (q + x1 - x2)/(-q + x1 - x2) = (q-s)/(-q-s)
    // at_infinity, in u = x1-x2: (x1 - x2 + q)/(x1 - x2 - q) = (u+q)/(u-q)
    RationalFunction gplus = pres.convention == DYConvention::at_zero
                                 ? rf_parse("(l-x)/(-l-x)", env)
                                 : rf_parse("(x+l)/(x-l)", env);
    RationalFunction gminus = rf_inv(gplus);

    ExchangeAlgebra alg;
    alg.orient = pres.convention == DYConvention::at_zero ? Orientation::laurent_down
                                                          : Orientation::laurent_up;
    alg.gens = {"e", "f", "h"};
    alg.rule.assign(3, std::vector<ExchangeRule>(3));
    auto set_exchange = [&](int a, int b, const RationalFunction& g) {
        ExchTerm t;
        t.bgen = b;
        t.agen = a;
        t.fk = prefactor_coeffs(g, pres.convention, order);
        alg.rule[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].terms.push_back(
            std::move(t));
        alg.rule[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].series_complete = false;
    };
    auto set_plain = [&](int a, int b) {
        ExchTerm t;
        t.bgen = b;
        t.agen = a;
        t.fk[0] = Rational(1);
        alg.rule[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].terms.push_back(
            std::move(t));
    };
    const int e = dy_gen_e(), f = dy_gen_f(), h = dy_gen_h();
    // e(x1)e(x2) = g+ e(x2)e(x1); the reversed pairs carry the same factors by
    // unitarity g(s) g(-s) = 1
    set_exchange(e, e, gplus);
    set_exchange(f, f, gminus);
    set_exchange(h, e, gplus);
    set_exchange(e, h, gplus);
    set_exchange(h, f, gminus);
    set_exchange(f, h, gminus);
    set_plain(h, h);
    // [e(x1), f(x2)] = sign * x1^{-1} delta(x2/x1) h(x2); sign -1 at infinity
    Rational sign = pres.convention == DYConvention::at_zero ? Rational(1) : Rational(-1);
    set_plain(e, f);
    alg.rule[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)].delta.push_back(
        DeltaTerm{h, sign});
    set_plain(f, e);
    alg.rule[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)].delta.push_back(
        DeltaTerm{h, -sign});
    return alg;
}

std::shared_ptr<ExchangeModule> build_vq(const Rational& q, int maxdeg) {
    std::int64_t order = 3 * static_cast<std::int64_t>(maxdeg) + 6;
    DYPresentation pres{q, DYConvention::at_zero};
    return std::make_shared<ExchangeModule>(dy_mode_relations(pres, order), maxdeg);
}

std::shared_ptr<ExchangeModule> build_dyinf_restricted(const Rational& q, int maxdepth) {
    std::int64_t order = 3 * static_cast<std::int64_t>(maxdepth) + 6;
    DYPresentation pres{q, DYConvention::at_infinity};
    return std::make_shared<ExchangeModule>(dy_mode_relations(pres, order), maxdepth);
}

}  // namespace vertexforge
