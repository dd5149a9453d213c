#include "vertexforge/graded.hpp"

namespace vertexforge {

std::vector<std::int32_t> GradedQuotient::basis() const {
    std::vector<std::int32_t> out;
    for (std::int32_t id = 0; id < static_cast<std::int32_t>(deg_.size()); ++id)
        if (!red_.is_pivot(id)) out.push_back(id);
    return out;
}

std::vector<std::int64_t> GradedQuotient::dims() const {
    std::vector<std::int64_t> labels_le(maxdeg_ + 1, 0), pivots_le(maxdeg_ + 1, 0);
    for (std::size_t id = 0; id < deg_.size(); ++id) {
        int d = deg_[id];
        if (d <= maxdeg_) ++labels_le[d];
    }
    for (const auto& [pivot, row] : red_.rows()) {
        int d = deg_[static_cast<std::size_t>(pivot)];
        if (d <= maxdeg_) ++pivots_le[d];
    }
    for (int d = 1; d <= maxdeg_; ++d) {
        labels_le[d] += labels_le[d - 1];
        pivots_le[d] += pivots_le[d - 1];
    }
    std::vector<std::int64_t> out(maxdeg_ + 1, 0);
    std::int64_t prev = 0;
    for (int d = 0; d <= maxdeg_; ++d) {
        std::int64_t filt = labels_le[d] - pivots_le[d];
        out[d] = filt - prev;
        prev = filt;
    }
    return out;
}

std::string dims_json(const std::vector<std::int64_t>& dims) {
    std::string out = "[";
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (d) out += ",";
        out += "[" + std::to_string(d) + "," + std::to_string(dims[d]) + "]";
    }
    return out + "]";
}

}  // namespace vertexforge
