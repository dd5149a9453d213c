#include "vertexforge/zf.hpp"

#include "vertexforge/ratfun.hpp"

namespace vertexforge {

namespace {

bool regular_at_zero(const RationalFunction& r) {
    return !is_zero(rf_eval(RationalFunction::from_poly(r.den),
                            {{Var::x, Rational(0)},
                             {Var::x0, Rational(0)},
                             {Var::x1, Rational(0)},
                             {Var::x2, Rational(0)},
                             {Var::z, Rational(0)}}));
}

// power-series coefficients 0..order of an entry
std::vector<Rational> entry_coeffs(const SEntry& e, std::int64_t order, bool& complete) {
    if (e.is_rational) {
        if (!regular_at_zero(e.rf))
            throw std::invalid_argument("zf: braiding entry has a pole at 0 (only C[[x]] braidings "
                                        "are supported)");
        Var v = Var::x;
        for (Var w : var_union(e.rf.num.vars, e.rf.den.vars)) v = w;
        RSeries s = iota_expand_uni(e.rf, v, Point::zero, Iv{0, order});
        std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
        for (const auto& [ex, c] : s.coeff)
            if (ex[0] >= 0 && ex[0] <= order) out[static_cast<std::size_t>(ex[0])] = c;
        complete = e.rf.is_polynomial();
        return out;
    }
    complete = false;
    std::vector<Rational> out = e.series;
    if (static_cast<std::int64_t>(out.size()) > order + 1) out.resize(static_cast<std::size_t>(order) + 1);
    return out;
}

}  // namespace

const SEntry* ZFData::entry(int vp, int up, int v, int u) const {
    auto it = s.find({vp, up, v, u});
    return it == s.end() ? nullptr : &it->second;
}

ExchangeAlgebra zf_mode_relations(const ZFData& data, std::int64_t order) {
    int n = data.dim();
    if (static_cast<int>(data.pairing.size()) != n)
        throw std::invalid_argument("zf: pairing matrix size mismatch");
    for (const auto& row : data.pairing)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("zf: pairing matrix size mismatch");
    ExchangeAlgebra alg;
    alg.orient = Orientation::laurent_down;
    alg.gens = data.names;
    alg.rule.assign(static_cast<std::size_t>(n), std::vector<ExchangeRule>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ExchangeRule& rule = alg.rule[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            rule.series_complete = true;
            // rule for a(x1) b(x2): braiding data S(x)(b (x) a)
            for (int bp = 0; bp < n; ++bp)
                for (int ap = 0; ap < n; ++ap) {
                    const SEntry* e = data.entry(bp, ap, b, a);
                    if (!e) continue;
                    bool complete = false;
                    std::vector<Rational> f = entry_coeffs(*e, order, complete);
                    if (!complete) rule.series_complete = false;
                    ExchTerm t;
                    t.bgen = bp;
                    t.agen = ap;
                    for (std::size_t k = 0; k < f.size(); ++k)
                        if (!is_zero(f[k])) t.fk[static_cast<std::int64_t>(k)] = f[k];
                    if (!t.fk.empty()) rule.terms.push_back(std::move(t));
                }
            if (!is_zero(data.pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]))
                rule.delta.push_back(
                    DeltaTerm{-1, data.pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]});
        }
    return alg;
}

std::shared_ptr<ExchangeModule> build_vacuum_module(const ZFData& data, int maxdeg) {
    std::int64_t order = 3 * static_cast<std::int64_t>(maxdeg) + 4;
    ExchangeAlgebra alg = zf_mode_relations(data, order);
    return std::make_shared<ExchangeModule>(std::move(alg), maxdeg);
}

ZFData preset_trivial(std::vector<std::string> names, Matrix pairing) {
    ZFData d;
    d.names = std::move(names);
    d.pairing = std::move(pairing);
    int n = d.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.set_diag(a, b, SEntry::one());
    return d;
}

ZFData preset_betagamma() {
    return preset_trivial({"u", "v"}, {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}});
}

ZFData preset_q_system(const std::vector<std::vector<SEntry>>& q, std::int64_t order) {
    int l = static_cast<int>(q.size());
    for (const auto& row : q)
        if (static_cast<int>(row.size()) != l)
            throw std::invalid_argument("q-system: square matrix required");
    // unitarity q_ij(x) q_ji(-x) = 1 to the stated order
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            bool ca = false, cb = false;
            std::vector<Rational> qij =
                entry_coeffs(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], order, ca);
            std::vector<Rational> qji =
                entry_coeffs(q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], order, cb);
            for (std::int64_t k = 0; k <= order; ++k) {
                Rational acc(0);
                for (std::int64_t t = 0; t <= k; ++t) {
                    if (t >= static_cast<std::int64_t>(qij.size())) break;
                    std::int64_t s = k - t;
                    if (s >= static_cast<std::int64_t>(qji.size())) continue;
                    Rational term =
                        qij[static_cast<std::size_t>(t)] * qji[static_cast<std::size_t>(s)];
                    if (s % 2) term = -term;
                    acc += term;
                }
                if (acc != Rational(k == 0 ? 1 : 0))
                    throw std::invalid_argument(
                        "q-system: unitarity q_ij(x) q_ji(-x) = 1 fails at order " +
                        std::to_string(k) + " for (i,j)=(" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
            }
        }
    ZFData d;
    for (int i = 0; i < l; ++i) d.names.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < l; ++i) d.names.push_back("v" + std::to_string(i + 1));
    int n = 2 * l;
    d.pairing.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    auto value_at_zero = [&](const SEntry& e) {
        bool c = false;
        std::vector<Rational> f = entry_coeffs(e, 0, c);
        if (f.empty() || is_zero(f[0]))
            throw std::invalid_argument("q-system: q_ij(0) must be nonzero");
        return f[0];
    };
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int ui = i, vj = l + j, vi = l + i;
            const SEntry& qij = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const SEntry& qji = q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            d.set_diag(ui, j, qij);        // u_i(x1) u_j(x2)
            d.set_diag(vi, vj, qij);       // v_i(x1) v_j(x2)
            d.set_diag(ui, vj, qji);       // u_i(x1) v_j(x2)
            d.set_diag(vj, ui, qij);       // v_j(x1) u_i(x2), inverse exchange by unitarity
            if (i == j) {
                d.pairing[static_cast<std::size_t>(ui)][static_cast<std::size_t>(vj)] = Rational(1);
                d.pairing[static_cast<std::size_t>(vj)][static_cast<std::size_t>(ui)] =
                    Rational(-1) / value_at_zero(qji);
            }
        }
    return d;
}

ZFData preset_deformed_betagamma(const Rational& lambda) {
    if (is_zero(lambda)) throw std::invalid_argument("deformed beta-gamma: lambda must be nonzero");
    std::map<std::string, Rational> env{{"l", lambda}};
    RationalFunction same = rf_parse("(l-x)/(l+x)", env);   // u-u and v-v exchange
    RationalFunction cross = rf_parse("(l+x)/(l-x)", env);  // u-v and v-u exchange
    ZFData d;
    d.names = {"u", "v"};
    d.pairing = {{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}};
    d.set_diag(0, 0, SEntry::rational(same));
    d.set_diag(1, 1, SEntry::rational(same));
    d.set_diag(0, 1, SEntry::rational(cross));
    d.set_diag(1, 0, SEntry::rational(cross));
    return d;
}

}  // namespace vertexforge
