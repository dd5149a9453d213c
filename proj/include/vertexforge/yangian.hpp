#pragma once

#include <memory>

#include "vertexforge/modealg.hpp"

namespace vertexforge {

enum class DYConvention { at_zero, at_infinity };

struct DYPresentation {
    Rational q;
    DYConvention convention = DYConvention::at_zero;
    // generator order is fixed: e, f, h
};

// Mode relations of DY_q(sl2) (at_zero: prefactors in C[[x1,x2]]) or of
// DY_q^inf(sl2) (at_infinity: prefactors in C[[x1^{-1},x2]]).  `order` bounds
// the carried prefactor expansions.
ExchangeAlgebra dy_mode_relations(const DYPresentation& pres, std::int64_t order);

// Universal vacuum module V_q at truncation degree maxdeg.
std::shared_ptr<ExchangeModule> build_vq(const Rational& q, int maxdeg);

// Mirror universal restricted DY_q^inf(sl2)-module: co-vacuum annihilated by
// the nonpositive modes, spanned by positive-mode words of weight <= maxdepth.
std::shared_ptr<ExchangeModule> build_dyinf_restricted(const Rational& q, int maxdepth);

inline int dy_gen_e() { return 0; }
inline int dy_gen_f() { return 1; }
inline int dy_gen_h() { return 2; }

}  // namespace vertexforge
