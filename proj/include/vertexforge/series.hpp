#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertexforge/rational.hpp"

namespace vertexforge {

// ---------------------------------------------------------------------------
// Formal variables (closed roster) and expansion domains
// ---------------------------------------------------------------------------

enum class Var : std::uint8_t { x = 0, x0 = 1, x1 = 2, x2 = 3, z = 4 };
inline constexpr int kVarCount = 5;

const char* var_name(Var v);
Var var_from_name(const std::string& name);  // throws on unknown identifier

enum class Point : std::uint8_t { zero, infinity };

// Ordered expansion point list in iota-subscript order: the *last* entry is
// the variable treated as smallest (expanded in nonnegative-direction powers
// relative to the ones before it). "x1@0,x2@0" is iota_{x1,x2}; "x@inf" is
// iota_{x,inf}; "x@inf,x0@0" is iota_{x,inf;x0,0}.
struct ExpansionDomain {
    std::vector<std::pair<Var, Point>> at;

    bool operator==(const ExpansionDomain& o) const { return at == o.at; }
    std::string str() const;
    static ExpansionDomain parse(const std::string& text);
    static ExpansionDomain univar(Var v, Point p) { return ExpansionDomain{{{v, p}}}; }
    static ExpansionDomain pair(Var outer, Point pouter, Var inner) {
        return ExpansionDomain{{{outer, pouter}, {inner, Point::zero}}};
    }
};

// ---------------------------------------------------------------------------
// Integer intervals with +/- infinity sentinels
// ---------------------------------------------------------------------------

inline constexpr std::int64_t kNegInf = INT64_MIN / 4;
inline constexpr std::int64_t kPosInf = INT64_MAX / 4;

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a <= kNegInf || b <= kNegInf) return kNegInf;
    if (a >= kPosInf || b >= kPosInf) return kPosInf;
    return a + b;
}

struct Iv {
    std::int64_t lo = kNegInf;
    std::int64_t hi = kPosInf;

    bool empty() const { return lo > hi; }
    bool contains(std::int64_t e) const { return lo <= e && e <= hi; }
    bool finite() const { return lo > kNegInf && hi < kPosInf; }
    static Iv all() { return {kNegInf, kPosInf}; }
    static Iv none() { return {1, 0}; }
    static Iv at(std::int64_t e) { return {e, e}; }
    friend Iv intersect(const Iv& a, const Iv& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }
    friend Iv hull(const Iv& a, const Iv& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }
    friend Iv sum(const Iv& a, const Iv& b) {
        if (a.empty() || b.empty()) return none();
        return {sat_add(a.lo, b.lo), sat_add(a.hi, b.hi)};
    }
    bool operator==(const Iv& o) const { return lo == o.lo && hi == o.hi; }
};

// ---------------------------------------------------------------------------
// Exponent vectors (up to 4 active variables)
// ---------------------------------------------------------------------------

struct Expo {
    std::array<std::int32_t, 4> e{0, 0, 0, 0};
    std::uint8_t n = 0;

    std::int32_t operator[](std::size_t i) const { return e[i]; }
    std::int32_t& operator[](std::size_t i) { return e[i]; }

    friend bool operator<(const Expo& a, const Expo& b) {
        if (a.n != b.n) return a.n < b.n;
        for (std::size_t i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
    friend bool operator==(const Expo& a, const Expo& b) {
        if (a.n != b.n) return false;
        for (std::size_t i = 0; i < a.n; ++i)
            if (a.e[i] != b.e[i]) return false;
        return true;
    }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Windowed series
//
// A Series stores exact coefficients on a per-variable guarantee window and
// carries per-variable support bounds ("box"): coefficients are provably zero
// outside the box.  A coefficient is *known* when its exponent lies inside
// the window in every variable, or outside the box in some variable.
// Truncated expansions of honest ring elements keep a finite box edge on the
// truncation side; pure distributions (delta kernels) have unbounded boxes
// and are only known inside their window.
// ---------------------------------------------------------------------------

template <class C>
struct Series {
    std::vector<Var> vars;  // sorted by roster order, no duplicates
    std::map<Expo, C> coeff;
    std::vector<Iv> win;  // guarantee window per variable
    std::vector<Iv> box;  // support universe bounds per variable
    std::optional<ExpansionDomain> domain;

    std::size_t arity() const { return vars.size(); }
    int var_index(Var v) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return static_cast<int>(i);
        return -1;
    }

    // Known interval per variable: window extended to infinity on sides where
    // it reaches the support bound (beyond which everything is provably zero).
    Iv known(std::size_t i) const {
        Iv k = win[i];
        if (k.empty()) return k;
        if (k.lo <= box[i].lo) k.lo = kNegInf;
        if (k.hi >= box[i].hi) k.hi = kPosInf;
        return k;
    }
    bool is_known(const Expo& ex) const {
        bool inside_win = true;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!box[i].contains(ex[i])) return true;  // provably zero
            if (!win[i].contains(ex[i])) inside_win = false;
        }
        return inside_win;
    }
    std::optional<C> at(const Expo& ex) const {
        if (!is_known(ex)) return std::nullopt;
        auto it = coeff.find(ex);
        if (it == coeff.end()) return C{};
        return it->second;
    }
    bool fully_known() const {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            Iv k = known(i);
            if (k.lo > kNegInf || k.hi < kPosInf) return false;
        }
        return true;
    }
};

using RSeries = Series<Rational>;

// -- coefficient traits -----------------------------------------------------

inline bool coeff_is_zero(const Rational& r) { return sgn(r) == 0; }
inline void coeff_axpy(Rational& dst, const Rational& a, const Rational& x) { dst += a * x; }

template <class C>
void series_trim(Series<C>& s) {
    for (auto it = s.coeff.begin(); it != s.coeff.end();) {
        if (coeff_is_zero(it->second))
            it = s.coeff.erase(it);
        else
            ++it;
    }
}

// -- constructors -----------------------------------------------------------

RSeries series_zero(std::vector<Var> vars);                       // exact zero
RSeries series_monomial(std::vector<Var> vars, Expo e, Rational c);  // exact
RSeries series_const(Rational c);

// -- structural helpers (templated over coefficient type) --------------------

std::vector<Var> var_union(const std::vector<Var>& a, const std::vector<Var>& b);

template <class C>
Series<C> series_align(const Series<C>& s, const std::vector<Var>& target) {
    if (s.vars == target) return s;
    Series<C> out;
    out.vars = target;
    out.domain = s.domain;
    std::array<int, 4> src_pos{};
    out.win.resize(target.size());
    out.box.resize(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        int j = s.var_index(target[i]);
        src_pos[i] = j;
        if (j >= 0) {
            out.win[i] = s.win[j];
            out.box[i] = s.box[j];
        } else {
            out.win[i] = Iv::all();
            out.box[i] = Iv::at(0);
        }
    }
    for (const auto& [ex, c] : s.coeff) {
        Expo t;
        t.n = static_cast<std::uint8_t>(target.size());
        for (std::size_t i = 0; i < target.size(); ++i) t[i] = src_pos[i] >= 0 ? ex[src_pos[i]] : 0;
        out.coeff.emplace(t, c);
    }
    return out;
}

template <class C>
Series<C> series_add_impl(const Series<C>& a0, const Series<C>& b0, int bsign) {
    std::vector<Var> vars = var_union(a0.vars, b0.vars);
    Series<C> a = series_align(a0, vars), b = series_align(b0, vars);
    Series<C> out;
    out.vars = vars;
    out.win.resize(vars.size());
    out.box.resize(vars.size());
    if (a.domain && b.domain && !(*a.domain == *b.domain))
        out.domain = std::nullopt;
    else
        out.domain = a.domain ? a.domain : b.domain;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out.box[i] = hull(a.box[i], b.box[i]);
        out.win[i] = intersect(a.known(i), b.known(i));
    }
    auto include = [&](const Expo& ex) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!out.box[i].contains(ex[i])) return false;  // known zero, skip
            if (!out.win[i].contains(ex[i])) return false;  // unknown cell
        }
        return true;
    };
    for (const auto& [ex, c] : a.coeff)
        if (include(ex)) out.coeff[ex] = c;
    for (const auto& [ex, c] : b.coeff) {
        if (!include(ex)) continue;
        auto [it, fresh] = out.coeff.emplace(ex, C{});
        if (bsign > 0)
            coeff_axpy(it->second, Rational(1), c);
        else
            coeff_axpy(it->second, Rational(-1), c);
        (void)fresh;
    }
    series_trim(out);
    return out;
}

template <class C>
Series<C> series_add(const Series<C>& a, const Series<C>& b) {
    return series_add_impl(a, b, +1);
}
template <class C>
Series<C> series_sub(const Series<C>& a, const Series<C>& b) {
    return series_add_impl(a, b, -1);
}

template <class C>
Series<C> series_scale(Series<C> s, const Rational& c) {
    if (is_zero(c)) {
        s.coeff.clear();
        return s;
    }
    for (auto& [ex, v] : s.coeff) {
        C scaled{};
        coeff_axpy(scaled, c, v);
        v = std::move(scaled);
    }
    series_trim(s);
    return s;
}

// Largest sound product window in one variable. Knowledge regions follow the
// rule: a product coefficient is certain only when every in-box split draws
// both factors from their known regions.
Iv mul_window_1d(Iv wa, Iv ba, Iv wb, Iv bb);

// Multiply a scalar series into a (scalar- or vector-valued) series.
template <class C>
Series<C> series_mul(const Series<Rational>& a0, const Series<C>& b0) {
    std::vector<Var> vars = var_union(a0.vars, b0.vars);
    Series<Rational> a = series_align(a0, vars);
    Series<C> b = series_align(b0, vars);
    Series<C> out;
    out.vars = vars;
    out.win.resize(vars.size());
    out.box.resize(vars.size());
    if (a.domain && b.domain && !(*a.domain == *b.domain))
        throw std::invalid_argument("series_mul: incompatible expansion domains");
    out.domain = a.domain ? a.domain : b.domain;
    bool enumerable = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out.box[i] = sum(a.box[i], b.box[i]);
        out.win[i] = mul_window_1d(a.win[i], a.box[i], b.win[i], b.box[i]);
        Iv cells = intersect(out.win[i], out.box[i]);
        if (cells.empty()) enumerable = false;
    }
    if (!enumerable) return out;  // nothing certain to store
    auto storable = [&](const Expo& ex) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (!out.win[i].contains(ex[i]) || !out.box[i].contains(ex[i])) return false;
        return true;
    };
    for (const auto& [pa, ca] : a.coeff) {
        for (const auto& [pb, cb] : b.coeff) {
            Expo ex;
            ex.n = static_cast<std::uint8_t>(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i)
                ex[i] = pa[i] + pb[i];
            if (!storable(ex)) continue;
            auto [it, fresh] = out.coeff.emplace(ex, C{});
            coeff_axpy(it->second, ca, cb);
            (void)fresh;
        }
    }
    series_trim(out);
    return out;
}

template <class C>
Series<C> series_restrict(Series<C> s, Var v, Iv w) {
    int i = s.var_index(v);
    if (i < 0) return s;
    s.win[i] = intersect(s.win[i], w);
    for (auto it = s.coeff.begin(); it != s.coeff.end();) {
        if (!s.is_known(it->first))
            it = s.coeff.erase(it);
        else
            ++it;
    }
    return s;
}

template <class C>
Series<C> series_derivative(const Series<C>& s, Var v) {
    int i = s.var_index(v);
    if (i < 0) throw std::invalid_argument("derivative: variable absent");
    Series<C> out;
    out.vars = s.vars;
    out.domain = s.domain;
    out.win = s.win;
    out.box = s.box;
    out.win[i].lo = sat_add(out.win[i].lo, -1);
    out.win[i].hi = sat_add(out.win[i].hi, -1);
    out.box[i].lo = sat_add(out.box[i].lo, -1);
    out.box[i].hi = sat_add(out.box[i].hi, -1);
    for (const auto& [ex, c] : s.coeff) {
        if (ex[i] == 0) continue;
        Expo t = ex;
        t[i] -= 1;
        C scaled{};
        coeff_axpy(scaled, Rational(ex[i]), c);
        if (!coeff_is_zero(scaled)) out.coeff.emplace(t, std::move(scaled));
    }
    return out;
}

// Witness for a failed table comparison.
struct Mismatch {
    Expo at;
    std::string lhs, rhs;
};

// Compares two scalar tables on the mutually known part of `probe` (a box
// given per variable of `vars`).  Cells where either side is unknown are
// skipped; returns the first differing cell.
std::optional<Mismatch> series_compare(const RSeries& a, const RSeries& b,
                                       const std::vector<Var>& vars, const std::vector<Iv>& probe);

std::string series_json(const RSeries& s);  // [[expo...],"p/q"] pairs, sorted

// ---------------------------------------------------------------------------
// Formal calculus operations
// ---------------------------------------------------------------------------

// Substitute v_from := v_keep + v_new (Taylor: nonnegative powers of v_new).
// v_keep may already occur in the series; v_new must not. All requested cells
// (the product box `want` over the *output* variable list) must be derivable,
// otherwise throws std::domain_error.
template <class C>
Series<C> series_subst_sum(const Series<C>& f, Var v_from, Var v_keep, Var v_new,
                           const std::vector<Var>& out_vars, const std::vector<Iv>& want);

// Coefficient of v^{-1}: series in the remaining variables, exact on `want`.
template <class C>
Series<C> series_residue(const Series<C>& f, Var v, const std::vector<Iv>& want);

// Public operation: f univariate in `from`; returns f(from -> from + offset).
RSeries taylor_shift(const RSeries& f, Var from, Var offset, const std::vector<Iv>& want);

// -- template bodies ----------------------------------------------------------

template <class Fn>
void for_each_cell(const std::vector<Iv>& boxes, Fn&& fn) {
    for (const Iv& b : boxes)
        if (!b.empty() && !b.finite()) throw std::invalid_argument("cell iteration needs a finite box");
    for (const Iv& b : boxes)
        if (b.empty()) return;
    std::vector<std::int64_t> cur(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) cur[i] = boxes[i].lo;
    while (true) {
        fn(cur);
        std::size_t i = 0;
        for (; i < boxes.size(); ++i) {
            if (cur[i] < boxes[i].hi) {
                ++cur[i];
                break;
            }
            cur[i] = boxes[i].lo;
        }
        if (i == boxes.size()) break;
        if (boxes.empty()) break;
    }
}

template <class C>
void require_known_box(const Series<C>& s, const std::vector<Iv>& want, const char* what) {
    for_each_cell(want, [&](const std::vector<std::int64_t>& cur) {
        Expo e;
        e.n = static_cast<std::uint8_t>(s.vars.size());
        for (std::size_t i = 0; i < s.vars.size(); ++i) e[i] = static_cast<std::int32_t>(cur[i]);
        if (!s.is_known(e)) throw std::domain_error(std::string(what) + ": coefficient at " + e.str() +
                                                    " is outside the guarantee window");
    });
}

template <class C>
Series<C> series_residue(const Series<C>& f, Var v, const std::vector<Iv>& want) {
    int iv = f.var_index(v);
    if (iv < 0) throw std::invalid_argument("residue: variable absent");
    std::vector<Var> out_vars;
    for (Var w : f.vars)
        if (w != v) out_vars.push_back(w);
    if (want.size() != out_vars.size()) throw std::invalid_argument("residue: window arity mismatch");
    Series<C> out;
    out.vars = out_vars;
    out.win.resize(out_vars.size());
    out.box.resize(out_vars.size());
    if (!f.box[iv].contains(-1)) {  // residue exactly zero
        for (std::size_t i = 0; i < out_vars.size(); ++i) {
            out.win[i] = Iv::all();
            out.box[i] = Iv::none();
        }
        return out;
    }
    if (!f.win[iv].contains(-1))
        throw std::domain_error("residue: v^{-1} slice is outside the guarantee window");
    std::size_t k = 0;
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (static_cast<int>(i) == iv) continue;
        out.win[k] = f.known(i);
        out.box[k] = f.box[i];
        ++k;
    }
    for (const auto& [ex, c] : f.coeff) {
        if (ex[iv] != -1) continue;
        Expo t;
        t.n = static_cast<std::uint8_t>(out_vars.size());
        std::size_t j = 0;
        for (std::size_t i = 0; i < f.vars.size(); ++i) {
            if (static_cast<int>(i) == iv) continue;
            t[j++] = ex[i];
        }
        out.coeff.emplace(t, c);
    }
    require_known_box(out, want, "residue");
    return out;
}

template <class C>
Series<C> series_subst_sum(const Series<C>& f, Var v_from, Var v_keep, Var v_new,
                           const std::vector<Var>& out_vars, const std::vector<Iv>& want) {
    int i_from = f.var_index(v_from);
    if (i_from < 0) throw std::invalid_argument("subst: source variable absent");
    if (f.var_index(v_new) >= 0) throw std::invalid_argument("subst: fresh variable already present");
    if (v_keep == v_new) throw std::invalid_argument("subst: keep and fresh variables coincide");
    bool keep_separate = (v_keep != v_from) && f.var_index(v_keep) >= 0;
    int i_keep = keep_separate ? f.var_index(v_keep) : -1;
    if (want.size() != out_vars.size()) throw std::invalid_argument("subst: window arity mismatch");

    Series<C> out;
    out.vars = out_vars;
    out.win = want;
    out.box.resize(out_vars.size());
    int o_keep = -1, o_new = -1, o_from = -1;
    for (std::size_t i = 0; i < out_vars.size(); ++i) {
        if (out_vars[i] == v_keep) o_keep = static_cast<int>(i);
        if (out_vars[i] == v_new) o_new = static_cast<int>(i);
        if (out_vars[i] == v_from) o_from = static_cast<int>(i);
    }
    if (o_keep < 0 || o_new < 0) throw std::invalid_argument("subst: output variables incomplete");
    if (v_from != v_keep && o_from >= 0)
        throw std::invalid_argument("subst: source variable must not appear in output");

    const Iv bf = f.box[i_from];
    const Iv bk = keep_separate ? f.box[i_keep] : Iv::at(0);
    // output support bounds
    std::size_t oi = 0;
    std::map<Var, Iv> other_box, other_win;
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (static_cast<int>(i) == i_from || static_cast<int>(i) == i_keep) continue;
        other_box[f.vars[i]] = f.box[i];
        other_win[f.vars[i]] = f.known(i);
    }
    (void)oi;
    Iv new_box{0, bf.hi >= 0 ? bf.hi : 0};
    if (bf.hi >= kPosInf || bf.lo < 0) new_box.hi = kPosInf;
    Iv keep_box{sat_add(sat_add(bk.lo, bf.lo), new_box.hi >= kPosInf ? kNegInf : -new_box.hi),
                sat_add(bk.hi, bf.hi)};
    if (bf.empty() || (keep_separate && bk.empty())) {
        keep_box = Iv::none();
        new_box = Iv::none();
    }
    for (std::size_t i = 0; i < out_vars.size(); ++i) {
        if (static_cast<int>(i) == o_keep)
            out.box[i] = keep_box;
        else if (static_cast<int>(i) == o_new)
            out.box[i] = new_box;
        else if (other_box.count(out_vars[i]))
            out.box[i] = other_box[out_vars[i]];
        else
            out.box[i] = Iv::at(0);
    }

    for_each_cell(want, [&](const std::vector<std::int64_t>& cur) {
        // skip cells that are provably zero
        for (std::size_t i = 0; i < out_vars.size(); ++i)
            if (!out.box[i].contains(cur[i])) return;
        std::int64_t m = cur[o_keep];
        std::int64_t j = cur[o_new];
        if (j < 0) return;
        // span of the keep-exponent read from f
        Iv c_range = keep_separate ? bk : Iv::at(0);
        // e1 = m + j - c must lie in the from-box
        Iv c_from_e1{sat_add(m + j, bf.hi >= kPosInf ? kNegInf : -bf.hi),
                     sat_add(m + j, bf.lo <= kNegInf ? kPosInf : -bf.lo)};
        c_range = intersect(c_range, c_from_e1);
        if (c_range.empty()) return;  // no contributions: zero, known
        if (!c_range.finite())
            throw std::domain_error("subst: contribution range unbounded; missing truncation bound");
        C acc{};
        for (std::int64_t c = c_range.lo; c <= c_range.hi; ++c) {
            std::int64_t e1 = m + j - c;
            if (e1 >= 0 && j > e1) continue;  // binomial vanishes
            Expo src;
            src.n = static_cast<std::uint8_t>(f.vars.size());
            for (std::size_t i = 0; i < f.vars.size(); ++i) {
                if (static_cast<int>(i) == i_from)
                    src[i] = static_cast<std::int32_t>(e1);
                else if (static_cast<int>(i) == i_keep)
                    src[i] = static_cast<std::int32_t>(c);
                else {
                    int oidx = -1;
                    for (std::size_t t = 0; t < out_vars.size(); ++t)
                        if (out_vars[t] == f.vars[i]) oidx = static_cast<int>(t);
                    src[i] = static_cast<std::int32_t>(cur[oidx]);
                }
            }
            auto val = f.at(src);
            if (!val)
                throw std::domain_error("subst: requested window exceeds derivable guarantee at " +
                                        src.str());
            if (coeff_is_zero(*val)) continue;
            coeff_axpy(acc, binomial(static_cast<long>(e1), static_cast<long>(j)), *val);
        }
        if (coeff_is_zero(acc)) return;
        Expo dst;
        dst.n = static_cast<std::uint8_t>(out_vars.size());
        for (std::size_t i = 0; i < out_vars.size(); ++i) dst[i] = static_cast<std::int32_t>(cur[i]);
        out.coeff.emplace(dst, std::move(acc));
    });
    return out;
}

// Substitution kernel sum_n a^n b^{-n-1} (the paper's b^{-1} delta(a/b)).
RSeries delta_pair(Var a, Var b, Iv wa, Iv wb);

enum class DeltaKind {
    two_var,             // x2^{-1} delta(x1/x2) pattern for the given pair
    jacobi_lhs1,         // x0^{-1} delta((x1-x2)/x0),   (x1-x2)^n in nonneg powers of x2
    jacobi_lhs2,         // x0^{-1} delta((x2-x1)/(-x0)),(x2-x1)^n in nonneg powers of x1
    jacobi_rhs           // x2^{-1} delta((x1-x0)/x2),   (x1-x0)^n in nonneg powers of x0
};

// Window order is (x0, x1, x2) for the three-term kernels.
RSeries delta_kernel(DeltaKind kind, Iv w0, Iv w1, Iv w2);

}  // namespace vertexforge
