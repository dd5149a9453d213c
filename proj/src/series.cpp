#include "vertexforge/series.hpp"

#include <sstream>

namespace vertexforge {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::x0: return "x0";
        case Var::x1: return "x1";
        case Var::x2: return "x2";
        case Var::z: return "z";
    }
    throw std::logic_error("var_name: bad enum");
}

Var var_from_name(const std::string& name) {
    if (name == "x") return Var::x;
    if (name == "x0") return Var::x0;
    if (name == "x1") return Var::x1;
    if (name == "x2") return Var::x2;
    if (name == "z") return Var::z;
    throw std::invalid_argument("unknown variable '" + name + "' (roster: x, x0, x1, x2, z)");
}

std::string ExpansionDomain::str() const {
    std::string out;
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (i) out += ",";
        out += var_name(at[i].first);
        out += at[i].second == Point::zero ? "@0" : "@inf";
    }
    return out;
}

ExpansionDomain ExpansionDomain::parse(const std::string& text) {
    ExpansionDomain d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find('@');
        if (pos == std::string::npos)
            throw std::invalid_argument("expansion domain entry '" + item + "' needs var@point");
        Var v = var_from_name(item.substr(0, pos));
        std::string pt = item.substr(pos + 1);
        Point p;
        if (pt == "0")
            p = Point::zero;
        else if (pt == "inf" || pt == "infinity")
            p = Point::infinity;
        else
            throw std::invalid_argument("expansion point '" + pt + "' (use 0 or inf)");
        for (const auto& [w, q] : d.at)
            if (w == v) throw std::invalid_argument("duplicate variable in expansion domain");
        d.at.emplace_back(v, p);
    }
    if (d.at.empty()) throw std::invalid_argument("empty expansion domain");
    return d;
}

std::string Expo::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

std::vector<Var> var_union(const std::vector<Var>& a, const std::vector<Var>& b) {
    std::vector<Var> out = a;
    for (Var v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

RSeries series_zero(std::vector<Var> vars) {
    std::sort(vars.begin(), vars.end());
    RSeries s;
    s.vars = std::move(vars);
    s.win.assign(s.vars.size(), Iv::all());
    s.box.assign(s.vars.size(), Iv::none());
    return s;
}

RSeries series_monomial(std::vector<Var> vars, Expo e, Rational c) {
    RSeries s = series_zero(std::move(vars));
    s.box.assign(s.vars.size(), Iv::at(0));
    for (std::size_t i = 0; i < s.vars.size(); ++i) s.box[i] = Iv::at(e[i]);
    if (!is_zero(c)) s.coeff.emplace(e, std::move(c));
    return s;
}

RSeries series_const(Rational c) { return series_monomial({}, Expo{}, std::move(c)); }

Iv mul_window_1d(Iv wa, Iv ba, Iv wb, Iv bb) {
    if (ba.empty() || bb.empty()) return Iv::all();  // a factor is exactly zero
    Iv ka = intersect(wa, Iv::all());
    Iv kb = wb;
    // extend to infinity where the window reaches the support bound
    if (!ka.empty()) {
        if (ka.lo <= ba.lo) ka.lo = kNegInf;
        if (ka.hi >= ba.hi) ka.hi = kPosInf;
    }
    if (!kb.empty()) {
        if (kb.lo <= bb.lo) kb.lo = kNegInf;
        if (kb.hi >= bb.hi) kb.hi = kPosInf;
    }
    if (ka.empty() || kb.empty()) return Iv::none();
    Iv out = Iv::all();
    if (ka.lo > kNegInf) {
        if (bb.hi >= kPosInf) return Iv::none();
        out.lo = std::max(out.lo, sat_add(ka.lo, bb.hi));
    }
    if (kb.lo > kNegInf) {
        if (ba.hi >= kPosInf) return Iv::none();
        out.lo = std::max(out.lo, sat_add(kb.lo, ba.hi));
    }
    if (ka.hi < kPosInf) {
        if (bb.lo <= kNegInf) return Iv::none();
        out.hi = std::min(out.hi, sat_add(ka.hi, bb.lo));
    }
    if (kb.hi < kPosInf) {
        if (ba.lo <= kNegInf) return Iv::none();
        out.hi = std::min(out.hi, sat_add(kb.hi, ba.lo));
    }
    return out;
}

std::optional<Mismatch> series_compare(const RSeries& a0, const RSeries& b0,
                                       const std::vector<Var>& vars, const std::vector<Iv>& probe) {
    RSeries a = series_align(a0, vars), b = series_align(b0, vars);
    if (vars.size() > 4) throw std::invalid_argument("series_compare: too many variables");
    std::vector<std::int64_t> cur(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!probe[i].finite()) throw std::invalid_argument("series_compare: probe box must be finite");
        cur[i] = probe[i].lo;
    }
    while (true) {
        Expo e;
        e.n = static_cast<std::uint8_t>(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) e[i] = static_cast<std::int32_t>(cur[i]);
        auto va = a.at(e), vb = b.at(e);
        if (va && vb && *va != *vb) return Mismatch{e, rat_str(*va), rat_str(*vb)};
        std::size_t i = 0;
        for (; i < vars.size(); ++i) {
            if (cur[i] < probe[i].hi) {
                ++cur[i];
                break;
            }
            cur[i] = probe[i].lo;
        }
        if (i == vars.size()) break;
        if (vars.empty()) break;
    }
    return std::nullopt;
}

std::string series_json(const RSeries& s) {
    std::string out = "[";
    bool first = true;
    for (const auto& [ex, c] : s.coeff) {
        if (!first) out += ",";
        first = false;
        out += "[[";
        for (std::size_t i = 0; i < ex.n; ++i) {
            if (i) out += ",";
            out += std::to_string(ex[i]);
        }
        out += "],\"" + rat_str(c) + "\"]";
    }
    return out + "]";
}

RSeries taylor_shift(const RSeries& f, Var from, Var offset, const std::vector<Iv>& want) {
    if (f.vars.size() != 1 || f.vars[0] != from)
        throw std::invalid_argument("taylor_shift: input must be univariate in the shifted variable");
    if (from == offset) throw std::invalid_argument("taylor_shift: offset variable must differ");
    std::vector<Var> out_vars = var_union({from}, {offset});
    return series_subst_sum(f, from, from, offset, out_vars, want);
}

RSeries delta_pair(Var a, Var b, Iv wa, Iv wb) {
    if (a == b) throw std::invalid_argument("delta_pair: distinct variables required");
    if (!wa.finite() || !wb.finite()) throw std::invalid_argument("delta_pair: window must be bounded");
    std::vector<Var> vars = var_union({a}, {b});
    RSeries s = series_zero(vars);
    s.win.assign(2, Iv::all());
    int ia = s.var_index(a), ib = s.var_index(b);
    s.win[ia] = wa;
    s.win[ib] = wb;
    s.box.assign(2, Iv::all());
    for (std::int64_t n = wa.lo; n <= wa.hi; ++n) {
        std::int64_t eb = -n - 1;
        if (!wb.contains(eb)) continue;
        Expo e;
        e.n = 2;
        e[ia] = static_cast<std::int32_t>(n);
        e[ib] = static_cast<std::int32_t>(eb);
        s.coeff.emplace(e, Rational(1));
    }
    return s;
}

RSeries delta_kernel(DeltaKind kind, Iv w0, Iv w1, Iv w2) {
    if (kind == DeltaKind::two_var) return delta_pair(Var::x1, Var::x2, w1, w2);
    if (!w0.finite() || !w1.finite() || !w2.finite())
        throw std::invalid_argument("delta_kernel: window must be bounded");
    RSeries s = series_zero({Var::x0, Var::x1, Var::x2});
    s.win = {w0, w1, w2};
    s.box.assign(3, Iv::all());
    auto put = [&](std::int64_t e0, std::int64_t e1, std::int64_t e2, Rational c) {
        if (!w0.contains(e0) || !w1.contains(e1) || !w2.contains(e2)) return;
        Expo e;
        e.n = 3;
        e[0] = static_cast<std::int32_t>(e0);
        e[1] = static_cast<std::int32_t>(e1);
        e[2] = static_cast<std::int32_t>(e2);
        auto [it, fresh] = s.coeff.emplace(e, Rational(0));
        it->second += c;
        (void)fresh;
    };
    switch (kind) {
        case DeltaKind::jacobi_lhs1:
            // sum_n (x1-x2)^n x0^{-n-1}, (x1-x2)^n in nonnegative powers of x2
            for (std::int64_t n = -w0.hi - 1; n <= -w0.lo - 1; ++n)
                for (std::int64_t j = std::max<std::int64_t>(0, w2.lo); j <= w2.hi; ++j) {
                    if (n >= 0 && j > n) break;
                    put(-n - 1, n - j, j, binomial(n, j) * Rational((j % 2) ? -1 : 1));
                }
            break;
        case DeltaKind::jacobi_lhs2:
            // sum_n (x2-x1)^n (-x0)^{-n-1}, (x2-x1)^n in nonnegative powers of x1
            for (std::int64_t n = -w0.hi - 1; n <= -w0.lo - 1; ++n)
                for (std::int64_t j = std::max<std::int64_t>(0, w1.lo); j <= w1.hi; ++j) {
                    if (n >= 0 && j > n) break;
                    Rational sign((n % 2 == 0) ? 1 : -1);  // (-1)^n from (-x0)^{-n}
                    put(-n - 1, j, n - j, binomial(n, j) * Rational((j % 2) ? -1 : 1) * sign);
                }
            break;
        case DeltaKind::jacobi_rhs:
            // sum_n (x1-x0)^n x2^{-n-1}, (x1-x0)^n in nonnegative powers of x0
            for (std::int64_t n = -w2.hi - 1; n <= -w2.lo - 1; ++n)
                for (std::int64_t j = std::max<std::int64_t>(0, w0.lo); j <= w0.hi; ++j) {
                    if (n >= 0 && j > n) break;
                    put(j, n - j, -n - 1, binomial(n, j) * Rational((j % 2) ? -1 : 1));
                }
            break;
        case DeltaKind::two_var:
            break;
    }
    series_trim(s);
    return s;
}

}  // namespace vertexforge
