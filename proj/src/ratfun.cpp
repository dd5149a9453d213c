#include "vertexforge/ratfun.hpp"

namespace vertexforge {

namespace {

using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

UniPoly uni_from_poly(const Poly& p, Var v) {
    for (Var w : p.vars)
        if (w != v) throw std::invalid_argument("iota: expression involves extra variables");
    UniPoly out(static_cast<std::size_t>(std::max<std::int64_t>(p.degree(v), 0)) + 1, Rational(0));
    int iv = p.var_index(v);
    for (const auto& [e, c] : p.coeff) out[static_cast<std::size_t>(iv >= 0 ? e[iv] : 0)] += c;
    uni_trim(out);
    return out;
}

std::size_t uni_order(const UniPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!is_zero(p[i])) return i;
    return p.size();
}

// inverse of a unit power series to `len` coefficients
UniPoly uni_series_inverse(const UniPoly& u, std::size_t len) {
    if (u.empty() || is_zero(u[0])) throw std::domain_error("series inverse of non-unit");
    UniPoly e(len, Rational(0));
    Rational inv0 = Rational(1) / u[0];
    e[0] = inv0;
    for (std::size_t m = 1; m < len; ++m) {
        Rational acc(0);
        for (std::size_t t = 1; t <= m && t < u.size(); ++t) acc += u[t] * e[m - t];
        e[m] = -inv0 * acc;
    }
    return e;
}

// Laurent expansion of num/den at v = 0 on exponents [*, hi]; returns the
// coefficient list plus its starting exponent.
std::pair<std::int64_t, UniPoly> laurent_at_zero(const UniPoly& num, const UniPoly& den,
                                                 std::int64_t hi) {
    if (num.empty()) return {0, {}};
    std::size_t k = uni_order(den);
    UniPoly unit(den.begin() + static_cast<std::ptrdiff_t>(k), den.end());
    std::int64_t floor = static_cast<std::int64_t>(uni_order(num)) - static_cast<std::int64_t>(k);
    if (hi < floor) return {floor, {}};
    std::size_t len = static_cast<std::size_t>(hi - floor + 1);
    UniPoly inv = uni_series_inverse(unit, len + num.size());
    UniPoly out(len, Rational(0));
    for (std::size_t t = 0; t < len; ++t) {
        Rational acc(0);
        std::size_t s = t + static_cast<std::size_t>(floor + static_cast<std::int64_t>(k));
        for (std::size_t j = 0; j < num.size() && j <= s; ++j) acc += num[j] * inv[s - j];
        out[t] = acc;
    }
    return {floor, out};
}

UniPoly uni_reverse(const UniPoly& p) {
    UniPoly out(p.rbegin(), p.rend());
    uni_trim(out);
    return out;
}

RSeries make_uni_series(Var v, std::int64_t start, const UniPoly& coeffs, Iv win, Iv box,
                        ExpansionDomain dom) {
    RSeries s = series_zero({v});
    s.domain = std::move(dom);
    s.win[0] = win;
    s.box[0] = box;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) continue;
        Expo e;
        e.n = 1;
        e[0] = static_cast<std::int32_t>(start + static_cast<std::int64_t>(i));
        s.coeff.emplace(e, coeffs[i]);
    }
    return s;
}

RSeries iota_uni_zero(const RationalFunction& r, Var v, Iv want) {
    UniPoly num = uni_from_poly(r.num, v), den = uni_from_poly(r.den, v);
    auto [floor, coeffs] = laurent_at_zero(num, den, want.hi);
    Iv box{r.is_zero() ? 1 : floor, r.is_zero() ? 0 : kPosInf};
    if (r.is_polynomial()) box.hi = r.num.degree(v);
    return make_uni_series(v, floor, coeffs, Iv{floor, want.hi}, box,
                           ExpansionDomain::univar(v, Point::zero));
}

RSeries iota_uni_inf(const RationalFunction& r, Var v, Iv want) {
    UniPoly num = uni_from_poly(r.num, v), den = uni_from_poly(r.den, v);
    if (num.empty())
        return make_uni_series(v, 0, {}, Iv::all(), Iv::none(),
                               ExpansionDomain::univar(v, Point::infinity));
    // r(x) = x^{deg n - deg d} * nrev(1/x)/drev(1/x); expand at 1/x = 0
    std::int64_t shift = static_cast<std::int64_t>(num.size()) - static_cast<std::int64_t>(den.size());
    UniPoly nrev = uni_reverse(num), drev = uni_reverse(den);
    // exponent of x: shift - m for the y^m coefficient; need down to want.lo
    std::int64_t m_hi = shift - want.lo;
    auto [mfloor, coeffs] = laurent_at_zero(nrev, drev, m_hi);
    // mfloor = 0 since both reversals are units at 0
    RSeries s = series_zero({v});
    s.domain = ExpansionDomain::univar(v, Point::infinity);
    std::int64_t ceil = shift - mfloor;
    s.win[0] = Iv{want.lo, ceil};
    s.box[0] = Iv{r.is_polynomial() ? r.num.min_degree(v) : kNegInf, ceil};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) continue;
        Expo e;
        e.n = 1;
        e[0] = static_cast<std::int32_t>(shift - (mfloor + static_cast<std::int64_t>(i)));
        s.coeff.emplace(e, coeffs[i]);
    }
    return s;
}

// coefficients of a two-variable rational function viewed in the inner var
std::map<std::int64_t, RationalFunction> coeffs_in(const Poly& p, Var inner) {
    std::map<std::int64_t, RationalFunction> out;
    int ii = p.var_index(inner);
    for (const auto& [e, c] : p.coeff) {
        std::int64_t k = ii >= 0 ? e[ii] : 0;
        Expo re = e;
        if (ii >= 0) re[ii] = 0;
        Poly mono = Poly::monomial(p.vars, re, c);
        auto [it, fresh] = out.emplace(k, RationalFunction::from_poly(Poly::zero()));
        it->second = rf_add(it->second, RationalFunction::from_poly(mono));
        (void)fresh;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RSeries iota_two_var(const RationalFunction& r, Var outer, Point pouter, Var inner,
                     const ExpansionDomain& dom, const std::vector<Iv>& want) {
    std::vector<Var> out_vars = var_union({outer}, {inner});
    if (want.size() != 2) throw std::invalid_argument("iota: window arity mismatch");
    int oi = out_vars[0] == outer ? 0 : 1;
    int ii = 1 - oi;
    Iv want_outer = want[oi], want_inner = want[ii];
    for (Var v : r.num.vars)
        if (v != outer && v != inner) throw std::invalid_argument("iota: expression involves extra variables");
    for (Var v : r.den.vars)
        if (v != outer && v != inner) throw std::invalid_argument("iota: expression involves extra variables");

    if (r.is_polynomial()) {
        RSeries s = poly_to_series(r.num);
        s = series_align(s, out_vars);
        s.domain = dom;
        return s;
    }

    RSeries out_zero = series_zero(out_vars);
    out_zero.domain = dom;
    out_zero.box.assign(2, Iv::none());
    if (r.is_zero()) return out_zero;

    auto nume = coeffs_in(r.num, inner);
    auto dene = coeffs_in(r.den, inner);
    if (dene.empty()) throw std::domain_error("iota: zero denominator");
    std::int64_t k0 = dene.begin()->first;
    RationalFunction lead = dene.begin()->second;
    std::int64_t nfloor = nume.begin()->first;
    std::int64_t mfloor = nfloor - k0;
    // inverse series e_m in the outer-variable rational function field
    std::int64_t mmax = want_inner.hi - mfloor;
    if (mmax < 0) {
        out_zero.box[ii] = Iv{mfloor, kPosInf};
        out_zero.box[oi] = Iv::all();
        out_zero.win[oi] = want_outer;
        out_zero.win[ii] = Iv{want_inner.lo, want_inner.hi};
        return out_zero;
    }
    std::vector<RationalFunction> inv(static_cast<std::size_t>(mmax) + 1);
    RationalFunction lead_inv = rf_inv(lead);
    for (std::size_t m = 0; m < inv.size(); ++m) {
        if (m == 0) {
            inv[0] = lead_inv;
            continue;
        }
        RationalFunction acc = RationalFunction::from_poly(Poly::zero());
        for (std::size_t t = 1; t <= m; ++t) {
            auto it = dene.find(k0 + static_cast<std::int64_t>(t));
            if (it == dene.end()) continue;
            acc = rf_add(acc, rf_mul(it->second, inv[m - t]));
        }
        inv[m] = rf_neg(rf_mul(lead_inv, acc));
    }
    RSeries out = series_zero(out_vars);
    out.domain = dom;
    out.win[oi] = want_outer;
    out.win[ii] = Iv{mfloor, want_inner.hi};
    out.box[oi] = Iv::all();
    out.box[ii] = Iv{mfloor, kPosInf};
    for (std::int64_t m = mfloor; m <= want_inner.hi; ++m) {
        // gamma_m = sum_j num_j * inv[m + k0 - j]
        RationalFunction gamma = RationalFunction::from_poly(Poly::zero());
        for (const auto& [j, nj] : nume) {
            std::int64_t idx = m + k0 - j;
            if (idx < 0 || idx >= static_cast<std::int64_t>(inv.size())) continue;
            gamma = rf_add(gamma, rf_mul(nj, inv[static_cast<std::size_t>(idx)]));
        }
        if (gamma.is_zero()) continue;
        RSeries slice = pouter == Point::zero ? iota_uni_zero(gamma, outer, want_outer)
                                              : iota_uni_inf(gamma, outer, want_outer);
        for (const auto& [e, c] : slice.coeff) {
            if (!want_outer.contains(e[0])) continue;
            Expo t;
            t.n = 2;
            t[oi] = e[0];
            t[ii] = static_cast<std::int32_t>(m);
            out.coeff.emplace(t, c);
        }
    }
    return out;
}

}  // namespace

RSeries iota_expand_uni(const RationalFunction& r, Var v, Point p, Iv want) {
    if (want.lo > want.hi) throw std::invalid_argument("iota: empty window");
    return p == Point::zero ? iota_uni_zero(r, v, want) : iota_uni_inf(r, v, want);
}

RSeries iota_expand(const RationalFunction& r, const ExpansionDomain& domain,
                    const std::vector<Iv>& want) {
    if (domain.at.size() == 1) {
        if (want.size() != 1) throw std::invalid_argument("iota: window arity mismatch");
        Var v = domain.at[0].first;
        for (Var w : var_union(r.num.vars, r.den.vars))
            if (w != v) throw std::invalid_argument("iota: expression involves extra variables");
        return iota_expand_uni(r, v, domain.at[0].second, want[0]);
    }
    if (domain.at.size() == 2) {
        if (domain.at[1].second != Point::zero)
            throw std::invalid_argument("iota: unsupported domain (inner expansion must be at 0)");
        return iota_two_var(r, domain.at[0].first, domain.at[0].second, domain.at[1].first, domain,
                            want);
    }
    throw std::invalid_argument("iota: unsupported domain");
}

RSeries iota_pair_delta(const RationalFunction& r, Iv w1, Iv w2) {
    // denominator must be a power of (x1 - x2) up to a scalar
    Poly diag = poly_sub(Poly::variable(Var::x1), Poly::variable(Var::x2));
    Poly den = r.den;
    while (!den.is_constant()) {
        bool ok = true;
        try {
            den = poly_divexact(den, diag);
        } catch (const std::domain_error&) {
            ok = false;
        }
        if (!ok) throw std::invalid_argument("iota_pair_delta: pole not along the diagonal x1=x2");
    }
    std::vector<Iv> want = {w1, w2};
    RSeries a = iota_expand(r, ExpansionDomain::pair(Var::x1, Point::zero, Var::x2), want);
    RSeries b = iota_expand(r, ExpansionDomain::pair(Var::x2, Point::zero, Var::x1), want);
    return series_sub(a, b);
}

}  // namespace vertexforge
