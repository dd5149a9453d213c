#pragma once

#include <functional>
#include <memory>

#include "vertexforge/modealg.hpp"
#include "vertexforge/series.hpp"

namespace vertexforge {

struct LieAlgebra {
    std::vector<std::string> names;
    // bracket[i][j] = sum_k c * e_k
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket;

    int dim() const { return static_cast<int>(names.size()); }
    void validate() const;  // antisymmetry and Jacobi on all triples
    static LieAlgebra sl2();        // e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f
    static LieAlgebra abelian(std::vector<std::string> names);
};

// PBW truncation of U(t^{-1} g [t^{-1}]): basis monomials are sorted words in
// the letters x_{i,s} = a_i (x) t^{-s} (s >= 1), of total weight <= maxdeg.
class PbwModule {
  public:
    PbwModule(LieAlgebra g, int maxdeg);

    const LieAlgebra& lie() const { return g_; }
    int maxdeg() const { return maxdeg_; }
    int label_count() const { return static_cast<int>(mons_.size()); }
    int label_degree(std::int32_t id) const { return degrees_[static_cast<std::size_t>(id)]; }
    std::string label_name(std::int32_t id) const;
    std::int32_t vacuum() const { return 0; }
    int vec_degree(const ModVec& v) const;

    // left multiplication by a_i (x) t^{-s}, PBW-straightened
    ModVec mult_letter(int i, int s, const ModVec& v) const;
    // product in U of a basis monomial with a vector
    ModVec mult_basis(std::int32_t id, const ModVec& v) const;
    ModVec mult(const ModVec& a, const ModVec& b) const;
    // the lifted derivation d/dt
    ModVec derive(const ModVec& v) const;

  private:
    LieAlgebra g_;
    int maxdeg_;
    std::vector<Word> mons_;  // Letter{gen i, mode s}, sorted ascending
    std::vector<int> degrees_;
    std::map<Word, std::int32_t> index_;
    mutable std::map<std::pair<Letter, Word>, ModVec> memo_;

    ModVec mult_letter_word(Letter l, const Word& w) const;
};

// Associative differential algebra on a truncated graded basis.
struct DiffAlgebra {
    int maxdeg = 0;
    std::int32_t unit = 0;
    int label_count = 0;
    std::function<int(std::int32_t)> degree;
    std::function<std::string(std::int32_t)> name;
    std::function<ModVec(std::int32_t, std::int32_t)> mul_basis;  // throws OutOfTruncation
    std::function<ModVec(const ModVec&)> derive;

    ModVec mul(const ModVec& a, const ModVec& b) const;
    int vec_degree(const ModVec& v) const;
    // associativity, Leibniz and unit laws on all in-window instances
    void validate() const;
};

DiffAlgebra diff_poly_ring(int maxdeg);                            // Q[y], d/dy
DiffAlgebra diff_half_currents(std::shared_ptr<PbwModule> m);      // U(t^{-1}g[t^{-1}]), d/dt
DiffAlgebra diff_free_boson(int colors, int maxdeg);               // S(U (x) t^{-1}C[t^{-1}])

// Y(a,x)b = (e^{xd} a) b: coefficients of x^0..x^order.
std::vector<ModVec> vad_vertex_map(const DiffAlgebra& A, const ModVec& a, const ModVec& b,
                                   int order);

// Half-current field a_i(x)^- = left multiplication by e^{x d/dt}(a_i (x) t^{-1})
// = sum_n (-1)^n (a_i (x) t^{-n-1}) x^n.
ModVec half_current_coeff(const PbwModule& m, int i, int n, const ModVec& v);

struct HalfCurrentCheck {
    bool pass = true;
    long cells = 0;
    std::string witness;
};

// a(x1)- b(x2)- - b(x2)- a(x1)- - (x2-x1)^{-1} ([a,b](x1)- - [a,b](x2)-) = 0
// on every basis vector of weight <= maxdeg, checked on the exponent window.
HalfCurrentCheck check_half_current_relation(const PbwModule& m, int a, int b, Iv w1, Iv w2);

}  // namespace vertexforge
