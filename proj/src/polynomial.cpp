#include "vertexforge/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace vertexforge {

namespace {

Expo expo_map(const Expo& e, const std::vector<Var>& from, const std::vector<Var>& to) {
    Expo t;
    t.n = static_cast<std::uint8_t>(to.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (e[i] == 0) continue;
        for (std::size_t j = 0; j < to.size(); ++j)
            if (to[j] == from[i]) t[j] = e[i];
    }
    return t;
}

void poly_trim(Poly& p) {
    for (auto it = p.coeff.begin(); it != p.coeff.end();) {
        if (is_zero(it->second))
            it = p.coeff.erase(it);
        else
            ++it;
    }
}

// drop variables that no longer occur
void poly_compact(Poly& p) {
    std::vector<Var> used;
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        bool seen = false;
        for (const auto& [e, c] : p.coeff)
            if (e[i] != 0) {
                seen = true;
                break;
            }
        if (seen) used.push_back(p.vars[i]);
    }
    if (used == p.vars) return;
    std::map<Expo, Rational> nc;
    for (const auto& [e, c] : p.coeff) nc.emplace(expo_map(e, p.vars, used), c);
    p.vars = used;
    p.coeff = std::move(nc);
}

Poly poly_aligned(const Poly& p, const std::vector<Var>& vars) {
    if (p.vars == vars) return p;
    Poly out;
    out.vars = vars;
    for (const auto& [e, c] : p.coeff) out.coeff.emplace(expo_map(e, p.vars, vars), c);
    return out;
}

}  // namespace

bool Poly::is_constant() const {
    if (coeff.empty()) return true;
    if (coeff.size() > 1) return false;
    const Expo& e = coeff.begin()->first;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (e[i] != 0) return false;
    return true;
}

Rational Poly::constant_value() const {
    if (coeff.empty()) return Rational(0);
    return coeff.begin()->second;
}

int Poly::var_index(Var v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return static_cast<int>(i);
    return -1;
}

std::int64_t Poly::degree(Var v) const {
    int i = var_index(v);
    std::int64_t d = coeff.empty() ? -1 : 0;
    if (i < 0) return d;
    for (const auto& [e, c] : coeff) d = std::max<std::int64_t>(d, e[i]);
    return d;
}

std::int64_t Poly::min_degree(Var v) const {
    int i = var_index(v);
    if (coeff.empty()) return 0;
    if (i < 0) return 0;
    std::int64_t d = kPosInf;
    for (const auto& [e, c] : coeff) d = std::min<std::int64_t>(d, e[i]);
    return d;
}

std::string Poly::str() const {
    if (coeff.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeff) {
        if (!out.empty()) out += " + ";
        out += rat_str(c);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (e[i] != 0) out += std::string("*") + var_name(vars[i]) + "^" + std::to_string(e[i]);
    }
    return out;
}

Poly Poly::zero() { return Poly{}; }

Poly Poly::constant(Rational c) {
    Poly p;
    if (!vertexforge::is_zero(c)) p.coeff.emplace(Expo{}, std::move(c));
    return p;
}

Poly Poly::variable(Var v) {
    Poly p;
    p.vars = {v};
    Expo e;
    e.n = 1;
    e[0] = 1;
    p.coeff.emplace(e, Rational(1));
    return p;
}

Poly Poly::monomial(std::vector<Var> vars, Expo e, Rational c) {
    Poly p;
    p.vars = std::move(vars);
    if (!vertexforge::is_zero(c)) p.coeff.emplace(e, std::move(c));
    poly_compact(p);
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<Var> vars = var_union(a.vars, b.vars);
    Poly out = poly_aligned(a, vars);
    Poly bb = poly_aligned(b, vars);
    for (const auto& [e, c] : bb.coeff) {
        auto [it, fresh] = out.coeff.emplace(e, Rational(0));
        it->second += c;
        (void)fresh;
    }
    poly_trim(out);
    poly_compact(out);
    return out;
}

Poly poly_neg(const Poly& a) {
    Poly out = a;
    for (auto& [e, c] : out.coeff) c = -c;
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    std::vector<Var> vars = var_union(a.vars, b.vars);
    Poly aa = poly_aligned(a, vars), bb = poly_aligned(b, vars);
    Poly out;
    out.vars = vars;
    for (const auto& [ea, ca] : aa.coeff)
        for (const auto& [eb, cb] : bb.coeff) {
            Expo e;
            e.n = static_cast<std::uint8_t>(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.coeff.emplace(e, Rational(0));
            it->second += ca * cb;
            (void)fresh;
        }
    poly_trim(out);
    poly_compact(out);
    return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (is_zero(c)) return Poly::zero();
    Poly out = a;
    for (auto& [e, v] : out.coeff) v *= c;
    return out;
}

Poly poly_pow(const Poly& a, long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Poly out = Poly::constant(Rational(1));
    Poly base = a;
    while (e > 0) {
        if (e & 1) out = poly_mul(out, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return out;
}

bool poly_equal(const Poly& a, const Poly& b) { return poly_sub(a, b).is_zero(); }

Poly poly_subst(const Poly& a, Var v, const Poly& g) {
    int iv = a.var_index(v);
    if (iv < 0) return a;
    Poly out = Poly::zero();
    for (const auto& [e, c] : a.coeff) {
        Poly term = Poly::constant(c);
        for (std::size_t i = 0; i < a.vars.size(); ++i) {
            if (e[i] == 0) continue;
            Poly base = (static_cast<int>(i) == iv) ? g : Poly::variable(a.vars[i]);
            term = poly_mul(term, poly_pow(base, e[i]));
        }
        out = poly_add(out, term);
    }
    return out;
}

namespace {

long total_deg(const Expo& e) {
    long t = 0;
    for (std::size_t i = 0; i < e.n; ++i) t += e[i];
    return t;
}

bool grlex_less(const Expo& a, const Expo& b) {
    long ta = total_deg(a), tb = total_deg(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

}  // namespace

std::pair<Expo, Rational> poly_leading(const Poly& a) {
    if (a.coeff.empty()) throw std::domain_error("poly_leading: zero polynomial");
    auto best = a.coeff.begin();
    for (auto it = a.coeff.begin(); it != a.coeff.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    std::vector<Var> vars = var_union(a.vars, b.vars);
    Poly r = poly_aligned(a, vars);
    Poly d = poly_aligned(b, vars);
    auto [lde, ldc] = poly_leading(d);
    Poly q;
    q.vars = vars;
    while (!r.is_zero()) {
        r = poly_aligned(r, vars);  // arithmetic helpers compact variable lists
        auto [lre, lrc] = poly_leading(r);
        Expo qe;
        qe.n = static_cast<std::uint8_t>(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            qe[i] = lre[i] - lde[i];
            if (qe[i] < 0) throw std::domain_error("poly_divexact: not divisible");
        }
        Rational qc = lrc / ldc;
        q.coeff[qe] += qc;
        Poly t;
        t.vars = vars;
        t.coeff.emplace(qe, qc);
        r = poly_sub(r, poly_mul(t, d));
    }
    poly_trim(q);
    poly_compact(q);
    return q;
}

// ---------------------------------------------------------------------------
// GCD machinery (<= 2 variables): dense univariate + primitive PRS
// ---------------------------------------------------------------------------

namespace {

using UniPoly = std::vector<Rational>;  // dense, index = exponent

void uni_trim(UniPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

UniPoly uni_from(const Poly& p, Var v) {
    UniPoly out(static_cast<std::size_t>(std::max<std::int64_t>(p.degree(v), 0)) + 1, Rational(0));
    int iv = p.var_index(v);
    for (const auto& [e, c] : p.coeff) {
        long k = iv >= 0 ? e[iv] : 0;
        out[static_cast<std::size_t>(k)] += c;
    }
    uni_trim(out);
    return out;
}

Poly uni_to_poly(const UniPoly& p, Var v) {
    Poly out;
    out.vars = {v};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (is_zero(p[i])) continue;
        Expo e;
        e.n = 1;
        e[0] = static_cast<std::int32_t>(i);
        out.coeff.emplace(e, p[i]);
    }
    poly_compact(out);
    return out;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::domain_error("uni_rem: zero divisor");
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly::zero();
    auto monicize = [](Poly p) {
        if (p.is_zero()) return p;
        auto [e, c] = poly_leading(p);
        return poly_scale(p, Rational(1) / c);
    };
    if (a.is_zero()) return monicize(b);
    if (b.is_zero()) return monicize(a);
    std::vector<Var> vars = var_union(a.vars, b.vars);
    if (vars.empty()) return Poly::constant(Rational(1));
    if (vars.size() == 1) {
        Var v = vars[0];
        return uni_to_poly(uni_gcd(uni_from(a, v), uni_from(b, v)), v);
    }
    if (vars.size() > 2) throw std::invalid_argument("poly_gcd: more than two variables");

    Var main = vars[0], sec = vars[1];
    // view as polynomials in `main` with univariate coefficients in `sec`
    auto coeffs_in_main = [&](const Poly& p) {
        std::map<std::int64_t, Poly> out;
        int im = p.var_index(main);
        for (const auto& [e, c] : p.coeff) {
            long k = im >= 0 ? e[im] : 0;
            Expo re = e;
            if (im >= 0) re[im] = 0;
            Poly mono = Poly::monomial(p.vars, re, c);
            auto [it, fresh] = out.emplace(k, Poly::zero());
            it->second = poly_add(it->second, mono);
            (void)fresh;
        }
        return out;
    };
    auto content_of = [&](const Poly& p) {
        Poly g = Poly::zero();
        for (auto& [k, q] : coeffs_in_main(p)) g = poly_gcd(g, q);
        return g;  // univariate in `sec`, monic
    };
    auto primitive = [&](const Poly& p, Poly& cont) {
        cont = content_of(p);
        return poly_divexact(p, cont);
    };

    Poly ca, cb;
    Poly pa = primitive(a, ca);
    Poly pb = primitive(b, cb);
    Poly cont_gcd = poly_gcd(ca, cb);

    // primitive PRS on pa, pb (main variable)
    Poly r0 = pa, r1 = pb;
    if (r0.degree(main) < r1.degree(main)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        // pseudo-remainder: lc(r1)^(d0-d1+1) * r0 mod r1
        std::int64_t d0 = r0.degree(main), d1 = r1.degree(main);
        auto lead_coeff = [&](const Poly& p) {
            std::int64_t d = p.degree(main);
            Poly lc = Poly::zero();
            int im = p.var_index(main);
            for (const auto& [e, c] : p.coeff) {
                long k = im >= 0 ? e[im] : 0;
                if (k != d) continue;
                Expo re = e;
                if (im >= 0) re[im] = 0;
                lc = poly_add(lc, Poly::monomial(p.vars, re, c));
            }
            return lc;
        };
        Poly lc1 = lead_coeff(r1);
        (void)d0;
        Poly r = r0;
        while (!r.is_zero() && r.degree(main) >= d1) {
            std::int64_t dr = r.degree(main);
            Poly lcr = lead_coeff(r);
            Poly shift = poly_pow(Poly::variable(main), dr - d1);
            // r := lc1*r - lcr*x^{dr-d1}*r1; the leading terms cancel exactly
            r = poly_sub(poly_mul(lc1, r), poly_mul(poly_mul(lcr, shift), r1));
        }
        if (!r.is_zero()) {
            Poly rc;
            r = primitive(r, rc);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    Poly g = poly_mul(cont_gcd, r0);
    return monicize(g);
}

RSeries poly_to_series(const Poly& a) {
    RSeries s = series_zero(a.vars);
    s.box.assign(a.vars.size(), Iv::none());
    for (std::size_t i = 0; i < a.vars.size(); ++i)
        s.box[i] = a.coeff.empty() ? Iv::none() : Iv{a.min_degree(a.vars[i]), a.degree(a.vars[i])};
    for (const auto& [e, c] : a.coeff) s.coeff.emplace(e, c);
    return s;
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

RationalFunction rf_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function: zero denominator");
    if (num.is_zero()) return RationalFunction{Poly::zero(), Poly::constant(Rational(1))};
    Poly g = poly_gcd(num, den);
    if (!g.is_constant() || !is_zero(g.constant_value() - Rational(1))) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    auto [e, lc] = poly_leading(den);
    num = poly_scale(num, Rational(1) / lc);
    den = poly_scale(den, Rational(1) / lc);
    return RationalFunction{std::move(num), std::move(den)};
}

RationalFunction RationalFunction::from_poly(Poly p) {
    return RationalFunction{std::move(p), Poly::constant(Rational(1))};
}

std::string RationalFunction::str() const {
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                        poly_mul(a.den, b.den));
}
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(poly_sub(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                        poly_mul(a.den, b.den));
}
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function: division by zero");
    return rf_normalize(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}
RationalFunction rf_neg(const RationalFunction& a) {
    return RationalFunction{poly_neg(a.num), a.den};
}
RationalFunction rf_inv(const RationalFunction& a) {
    if (a.is_zero()) throw std::domain_error("rational function: inverse of zero");
    return rf_normalize(a.den, a.num);
}
RationalFunction rf_pow(const RationalFunction& a, long e) {
    if (e < 0) return rf_pow(rf_inv(a), -e);
    RationalFunction out = RationalFunction::constant(Rational(1));
    RationalFunction base = a;
    while (e > 0) {
        if (e & 1) out = rf_mul(out, base);
        base = rf_mul(base, base);
        e >>= 1;
    }
    return out;
}
RationalFunction rf_subst(const RationalFunction& a, Var v, const Poly& g) {
    return rf_normalize(poly_subst(a.num, v, g), poly_subst(a.den, v, g));
}
bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return poly_equal(poly_mul(a.num, b.den), poly_mul(b.num, a.den));
}

Rational rf_eval(const RationalFunction& a, const std::map<Var, Rational>& point) {
    auto eval_poly = [&](const Poly& p) {
        Rational acc(0);
        for (const auto& [e, c] : p.coeff) {
            Rational term = c;
            for (std::size_t i = 0; i < p.vars.size(); ++i) {
                auto it = point.find(p.vars[i]);
                if (e[i] != 0 && it == point.end())
                    throw std::invalid_argument("rf_eval: unbound variable");
                for (long k = 0; k < e[i]; ++k) term *= it->second;
            }
            acc += term;
        }
        return acc;
    };
    Rational d = eval_poly(a.den);
    if (is_zero(d)) throw std::domain_error("rf_eval: pole at evaluation point");
    return eval_poly(a.num) / d;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const std::map<std::string, Rational>& consts;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    RationalFunction expr() {
        RationalFunction acc = eat('-') ? rf_neg(term()) : term();
        while (true) {
            if (eat('+'))
                acc = rf_add(acc, term());
            else if (eat('-'))
                acc = rf_sub(acc, term());
            else
                break;
        }
        return acc;
    }
    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            if (eat('*'))
                acc = rf_mul(acc, factor());
            else if (eat('/'))
                acc = rf_div(acc, factor());
            else
                break;
        }
        return acc;
    }
    RationalFunction factor() {
        if (eat('-')) return rf_neg(factor());
        RationalFunction base = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer();
            return rf_pow(base, e);
        }
        return base;
    }
    long integer() {
        skip_ws();
        bool paren = eat('(');
        skip_ws();
        bool negative = false;
        if (eat('-')) negative = true;
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer exponent");
        long v = std::stol(text.substr(start, pos - start));
        if (paren && !eat(')')) fail("expected ')' after exponent");
        return negative ? -v : v;
    }
    RationalFunction atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RationalFunction inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return RationalFunction::constant(Rational(mpz_class(text.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto it = consts.find(name);
            if (it != consts.end()) return RationalFunction::constant(it->second);
            try {
                return RationalFunction::from_poly(Poly::variable(var_from_name(name)));
            } catch (const std::invalid_argument&) {
                fail("unknown identifier '" + name + "' (not a roster variable or bound constant)");
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RationalFunction rf_parse(const std::string& text, const std::map<std::string, Rational>& consts) {
    Parser p{text, 0, consts};
    RationalFunction out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace vertexforge
