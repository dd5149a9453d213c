#pragma once

#include <string>
#include <vector>

#include "vertexforge/linalg.hpp"

namespace vertexforge {

// Exact quotient of a graded spanning set by relation rows, built by
// incremental row reduction. Ids must be assigned ascending in
// (degree, tiebreak) order so that row pivots sit at the highest degree they
// touch; graded dimensions are then filtration dimensions
// dim(F_d) - dim(F_{d-1}), which handles inhomogeneous relation tails.
class GradedQuotient {
  public:
    GradedQuotient() = default;
    GradedQuotient(std::vector<int> label_degrees, int maxdeg)
        : deg_(std::move(label_degrees)), maxdeg_(maxdeg) {}

    bool add_relation(ModVec r) { return red_.add_row(std::move(r)); }
    ModVec reduce(ModVec v) const { return red_.reduce(std::move(v)); }
    bool in_basis(std::int32_t id) const { return !red_.is_pivot(id); }
    std::size_t rank() const { return red_.rank(); }

    // basis of the quotient: non-pivot label ids, ascending
    std::vector<std::int32_t> basis() const;
    // dims[d] for d = 0..maxdeg
    std::vector<std::int64_t> dims() const;

  private:
    std::vector<int> deg_;
    int maxdeg_ = 0;
    RowReducer red_;
};

// JSON rendering of graded dimensions: [[degree, dim], ...]
std::string dims_json(const std::vector<std::int64_t>& dims);

}  // namespace vertexforge
