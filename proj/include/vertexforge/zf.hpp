#pragma once

#include <memory>

#include "vertexforge/modealg.hpp"
#include "vertexforge/polynomial.hpp"

namespace vertexforge {

// Zamolodchikov-Faddeev data: a finite-dimensional H with a bilinear pairing
// and a braiding map S(x): H (x) H -> H (x) H (x) C[[x]].  Entries may be
// given as rational functions regular at 0 (expanded internally) or as
// explicit truncated power series.
struct SEntry {
    bool is_rational = true;
    RationalFunction rf;
    std::vector<Rational> series;  // coefficients from x^0 when !is_rational

    static SEntry rational(RationalFunction r) { return SEntry{true, std::move(r), {}}; }
    static SEntry truncated(std::vector<Rational> c) { return SEntry{false, {}, std::move(c)}; }
    static SEntry one() { return rational(RationalFunction::constant(Rational(1))); }
};

struct ZFData {
    std::vector<std::string> names;  // generators of H
    Matrix pairing;                  // <u_i, u_j>
    // braiding entry for S(x)(v (x) u) = sum v' (x) u' (x) f(x):
    // key (v', u', v, u) by generator index; absent keys mean zero
    std::map<std::array<int, 4>, SEntry> s;

    int dim() const { return static_cast<int>(names.size()); }
    void set_diag(int a, int b, SEntry f) { s[{b, a, b, a}] = std::move(f); }  // rule pair (a,b)
    const SEntry* entry(int vp, int up, int v, int u) const;
};

// Exchange rules a(m) b(n) -> ... derived from relation (2.18) by exact
// coefficient extraction with f(x2-x1) expanded in nonnegative powers of x1.
// `order` bounds the braiding-series truncation carried by the rules.
ExchangeAlgebra zf_mode_relations(const ZFData& data, std::int64_t order);

// Universal vacuum module V(H,S) truncated at maxdeg.
std::shared_ptr<ExchangeModule> build_vacuum_module(const ZFData& data, int maxdeg);

// Trivial braiding (f = 1) with the given pairing matrix (must satisfy the
// exchange-consistency condition <v,u> = -<u,v>).
ZFData preset_trivial(std::vector<std::string> names, Matrix pairing);

// Diagonal Q-system data per the two-family presentation: generators
// u^1..u^l, v^1..v^l with q_ij braiding and delta_ij pairing. Verifies
// unitarity q_ij(x) q_ji(-x) = 1 up to `order` and throws on failure.
ZFData preset_q_system(const std::vector<std::vector<SEntry>>& q, std::int64_t order);

// Deformed beta-gamma system at a nonzero rational lambda:
// generators u, v with braiding expansions of (lambda -+ x)/(lambda +- x).
ZFData preset_deformed_betagamma(const Rational& lambda);

// standard beta-gamma: H = span{u, v}, <u,v> = 1 = -<v,u>, trivial braiding
ZFData preset_betagamma();

}  // namespace vertexforge
