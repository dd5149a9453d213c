#pragma once

#include "vertexforge/polynomial.hpp"
#include "vertexforge/series.hpp"

namespace vertexforge {

// Expands a rational function under the polynomial-preserving field embedding
// named by `domain` (one of iota_{v;0}, iota_{v,inf}, iota_{v1,v2} with the
// second variable expanded nonnegatively, iota_{v,inf;v0,0}).  `want` gives
// the guarantee window per output variable, in roster-sorted order.
RSeries iota_expand(const RationalFunction& r, const ExpansionDomain& domain,
                    const std::vector<Iv>& want);

// Convenience: univariate expansion window [lo, hi].
RSeries iota_expand_uni(const RationalFunction& r, Var v, Point p, Iv want);

// iota_{x1,x2}(r) - iota_{x2,x1}(r) for r = s/(x1-x2)^m: a delta-type window
// table. Throws when the denominator has factors away from the diagonal.
RSeries iota_pair_delta(const RationalFunction& r, Iv w1, Iv w2);

}  // namespace vertexforge
