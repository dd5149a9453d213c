#include "vertexforge/linalg.hpp"

#include <stdexcept>

namespace vertexforge {

std::string ModVec::str() const {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [id, v] : c) {
        if (!out.empty()) out += " + ";
        out += rat_str(v) + "*[" + std::to_string(id) + "]";
    }
    return out;
}

void coeff_axpy(ModVec& dst, const Rational& a, const ModVec& x) {
    if (is_zero(a)) return;
    for (const auto& [id, v] : x.c) {
        auto [it, fresh] = dst.c.emplace(id, Rational(0));
        it->second += a * v;
        if (is_zero(it->second)) dst.c.erase(it);
        (void)fresh;
    }
}

ModVec mv_scale(const ModVec& v, const Rational& a) {
    ModVec out;
    coeff_axpy(out, a, v);
    return out;
}
ModVec mv_add(const ModVec& a, const ModVec& b) {
    ModVec out = a;
    coeff_axpy(out, Rational(1), b);
    return out;
}
ModVec mv_sub(const ModVec& a, const ModVec& b) {
    ModVec out = a;
    coeff_axpy(out, Rational(-1), b);
    return out;
}

RrefResult rref(Matrix m) {
    RrefResult out;
    std::size_t nrows = m.size();
    std::size_t ncols = nrows ? m[0].size() : 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
        std::size_t sel = lead;
        while (sel < nrows && is_zero(m[sel][col])) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[lead]);
        Rational inv = Rational(1) / m[lead][col];
        for (std::size_t j = col; j < ncols; ++j) m[lead][j] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == lead || is_zero(m[r][col])) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j < ncols; ++j) m[r][j] -= f * m[lead][j];
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    out.reduced = std::move(m);
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            v[r.pivot_cols[pr]] = -r.reduced[pr][free_col];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rational>> solve_linear(const Matrix& m, const std::vector<Rational>& rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("solve_linear: size mismatch");
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    RrefResult r = rref(std::move(aug));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        if (r.pivot_cols[i] == ncols) return std::nullopt;  // pivot in rhs column
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.reduced[i][ncols];
    return x;
}

ModVec RowReducer::reduce(ModVec v) const {
    // pivot rows are mutually reduced, so each elimination removes one pivot
    // id and introduces none
    while (true) {
        const ModVec* row = nullptr;
        Rational f;
        for (auto vi = v.c.rbegin(); vi != v.c.rend(); ++vi) {
            auto pr = rows_.find(vi->first);
            if (pr != rows_.end()) {
                row = &pr->second;
                f = vi->second;
                break;
            }
        }
        if (!row) break;
        coeff_axpy(v, -f, *row);
    }
    return v;
}

bool RowReducer::add_row(ModVec v) {
    v = reduce(std::move(v));
    if (v.c.empty()) return false;
    auto top = std::prev(v.c.end());
    std::int32_t pivot = top->first;
    Rational inv = Rational(1) / top->second;
    ModVec row = mv_scale(v, inv);
    // keep existing rows fully reduced
    for (auto& [p, r] : rows_) {
        auto it = r.c.find(pivot);
        if (it == r.c.end()) continue;
        Rational f = it->second;
        coeff_axpy(r, -f, row);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

}  // namespace vertexforge
