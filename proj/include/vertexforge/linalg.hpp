#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "vertexforge/rational.hpp"

namespace vertexforge {

// Sparse vector over basis-label ids.
struct ModVec {
    std::map<std::int32_t, Rational> c;

    bool empty() const { return c.empty(); }
    static ModVec unit(std::int32_t id) {
        ModVec v;
        v.c.emplace(id, Rational(1));
        return v;
    }
    friend bool operator==(const ModVec& a, const ModVec& b) { return a.c == b.c; }
    std::string str() const;
};

inline bool coeff_is_zero(const ModVec& v) { return v.c.empty(); }
void coeff_axpy(ModVec& dst, const Rational& a, const ModVec& x);

inline void mv_axpy(ModVec& dst, const Rational& a, const ModVec& x) { coeff_axpy(dst, a, x); }
ModVec mv_scale(const ModVec& v, const Rational& a);
ModVec mv_add(const ModVec& a, const ModVec& b);
ModVec mv_sub(const ModVec& a, const ModVec& b);

// ---------------------------------------------------------------------------
// Dense exact RREF (deterministic pivoting: first nonzero column, then the
// smallest row index).
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<Rational>>;

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);
// Solves m x = rhs; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(const Matrix& m, const std::vector<Rational>& rhs);

// ---------------------------------------------------------------------------
// Incremental sparse Gauss-Jordan elimination. Pivot of a row is its largest
// label id; rows are kept mutually reduced, so reduce() yields canonical
// forms. Label ids must be assigned in ascending (degree, tiebreak) order for
// the graded bookkeeping done by callers.
// ---------------------------------------------------------------------------

class RowReducer {
  public:
    ModVec reduce(ModVec v) const;
    bool add_row(ModVec v);  // true when the row added a new pivot
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::int32_t, ModVec, std::greater<std::int32_t>>& rows() const { return rows_; }
    bool is_pivot(std::int32_t id) const { return rows_.count(id) > 0; }

  private:
    std::map<std::int32_t, ModVec, std::greater<std::int32_t>> rows_;
};

}  // namespace vertexforge
