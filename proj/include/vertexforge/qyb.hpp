#pragma once

#include <optional>
#include <string>

#include "vertexforge/polynomial.hpp"

namespace vertexforge {

// A candidate unitary rational quantum Yang-Baxter operator: an n^2 x n^2
// matrix of univariate rational functions acting on U (x) U in the basis
// e_i (x) e_j, row/column index = i*n + j.
struct QYBMatrix {
    int dim = 0;  // n
    Var var = Var::x;
    std::vector<std::vector<RationalFunction>> entries;

    static QYBMatrix identity(int n, Var v = Var::x);
    void validate() const;
};

struct QybReport {
    bool unitarity = true;
    bool ybe = true;
    // first failing entry, as "condition[row,col]" with the defect
    std::optional<std::string> witness;
    bool pass(const std::string& mode) const {
        if (mode == "unitarity") return unitarity;
        if (mode == "ybe") return ybe;
        return unitarity && ybe;
    }
};

// Exact identity checks: unitarity S(-x) S21(x) = 1 and the Yang-Baxter
// equation S12(x) S13(x+z) S23(z) = S23(z) S13(x+z) S12(x), both verified as
// rational-function matrix identities (no truncation).
QybReport qyb_check(const QYBMatrix& s, const std::string& mode = "both");

}  // namespace vertexforge
