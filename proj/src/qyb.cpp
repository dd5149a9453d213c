#include "vertexforge/qyb.hpp"

namespace vertexforge {

QYBMatrix QYBMatrix::identity(int n, Var v) {
    QYBMatrix s;
    s.dim = n;
    s.var = v;
    int nn = n * n;
    s.entries.assign(nn, std::vector<RationalFunction>(nn, RationalFunction::constant(Rational(0))));
    for (int i = 0; i < nn; ++i) s.entries[i][i] = RationalFunction::constant(Rational(1));
    return s;
}

void QYBMatrix::validate() const {
    std::size_t nn = static_cast<std::size_t>(dim) * dim;
    if (entries.size() != nn) throw std::invalid_argument("qyb: dimension mismatch");
    for (const auto& row : entries)
        if (row.size() != nn) throw std::invalid_argument("qyb: dimension mismatch");
    for (const auto& row : entries)
        for (const auto& e : row)
            for (Var v : var_union(e.num.vars, e.den.vars))
                if (v != var) throw std::invalid_argument("qyb: entries must share one variable");
}

namespace {

using RfMatrix = std::vector<std::vector<RationalFunction>>;

RfMatrix rf_matmul(const RfMatrix& a, const RfMatrix& b) {
    std::size_t n = a.size();
    RfMatrix out(n, std::vector<RationalFunction>(n, RationalFunction::constant(Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] = rf_add(out[i][j], rf_mul(a[i][k], b[k][j]));
            }
        }
    return out;
}

std::optional<std::string> rf_mat_is_identity(const RfMatrix& m, const char* label) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            RationalFunction want =
                RationalFunction::constant(Rational(i == j ? 1 : 0));
            if (!rf_equal(m[i][j], want))
                return std::string(label) + "[" + std::to_string(i) + "," + std::to_string(j) +
                       "] = " + m[i][j].str();
        }
    return std::nullopt;
}

std::optional<std::string> rf_mat_equal(const RfMatrix& a, const RfMatrix& b, const char* label) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!rf_equal(a[i][j], b[i][j]))
                return std::string(label) + "[" + std::to_string(i) + "," + std::to_string(j) +
                       "]: " + a[i][j].str() + " != " + b[i][j].str();
    return std::nullopt;
}

}  // namespace

QybReport qyb_check(const QYBMatrix& s, const std::string& mode) {
    s.validate();
    QybReport rep;
    int n = s.dim, nn = n * n;
    auto idx2 = [n](int i, int j) { return i * n + j; };

    if (mode == "unitarity" || mode == "both") {
        // S(-x) S21(x) == 1
        Poly minus_x = poly_neg(Poly::variable(s.var));
        RfMatrix sneg(nn, std::vector<RationalFunction>(nn));
        RfMatrix s21(nn, std::vector<RationalFunction>(nn));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        sneg[idx2(i, j)][idx2(k, l)] =
                            rf_subst(s.entries[idx2(i, j)][idx2(k, l)], s.var, minus_x);
                        s21[idx2(i, j)][idx2(k, l)] = s.entries[idx2(j, i)][idx2(l, k)];
                    }
        auto bad = rf_mat_is_identity(rf_matmul(sneg, s21), "S(-x)S21(x)");
        if (bad) {
            rep.unitarity = false;
            if (!rep.witness) rep.witness = bad;
        }
    }

    if (mode == "ybe" || mode == "both") {
        int nnn = n * n * n;
        auto idx3 = [n](int i, int j, int k) { return (i * n + j) * n + k; };
        Poly xz = poly_add(Poly::variable(s.var), Poly::variable(Var::z));
        Poly zz = Poly::variable(Var::z);
        auto lift = [&](int slot_a, int slot_b, const Poly& arg) {
            RfMatrix m(nnn, std::vector<RationalFunction>(nnn, RationalFunction::constant(Rational(0))));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b) {
                                const RationalFunction& e = s.entries[idx2(i, j)][idx2(a, b)];
                                if (e.is_zero()) continue;
                                RationalFunction comp = rf_subst(e, s.var, arg);
                                int row[3], col[3];
                                row[slot_a] = i;
                                row[slot_b] = j;
                                col[slot_a] = a;
                                col[slot_b] = b;
                                int other = 3 - slot_a - slot_b;
                                row[other] = k;
                                col[other] = k;
                                m[idx3(row[0], row[1], row[2])][idx3(col[0], col[1], col[2])] = comp;
                            }
            return m;
        };
        RfMatrix s12x = lift(0, 1, Poly::variable(s.var));
        RfMatrix s13xz = lift(0, 2, xz);
        RfMatrix s23z = lift(1, 2, zz);
        RfMatrix lhs = rf_matmul(rf_matmul(s12x, s13xz), s23z);
        RfMatrix rhs = rf_matmul(rf_matmul(s23z, s13xz), s12x);
        auto bad = rf_mat_equal(lhs, rhs, "YBE");
        if (bad) {
            rep.ybe = false;
            if (!rep.witness) rep.witness = bad;
        }
    }
    return rep;
}

}  // namespace vertexforge
