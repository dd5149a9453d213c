#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vertexforge/graded.hpp"
#include "vertexforge/linalg.hpp"
#include "vertexforge/series.hpp"

namespace vertexforge {

// Orientation of generating-function truncation:
//   laurent_down: a(x) in Hom(W, W((x)))        (modes die for large index)
//   laurent_up:   a(x) in Hom(W, W((x^{-1})))   (modes die for very negative index)
enum class Orientation { laurent_down, laurent_up };

struct OutOfTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Letter {
    std::int16_t gen = 0;
    std::int32_t mode = 0;
    friend bool operator<(const Letter& a, const Letter& b) {
        return a.gen != b.gen ? a.gen < b.gen : a.mode < b.mode;
    }
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.mode == b.mode;
    }
};
using Word = std::vector<Letter>;

// One summand of an exchange rule a(x1) b(x2) = sum f(...) b'(x2) a'(x1) + deltas.
// Coefficient series index k:
//   laurent_down: fk[k] multiplies (x2-x1)^k, k >= 0 (power series data)
//   laurent_up:   fk[0] is the plain swap constant; fk[k] for k >= 1
//                 multiplies (x1-x2)^{-k} expanded in C[[x1^{-1}, x2]]
struct ExchTerm {
    int bgen = 0, agen = 0;
    std::map<std::int64_t, Rational> fk;
};

// Delta summands: gen < 0 contributes coeff * delta_{m+n+1,0} (scalar term of
// coeff * x2^{-1} delta(x1/x2)); gen >= 0 contributes coeff * g(m+n) (term of
// coeff * x1^{-1} delta(x2/x1) g(x2)).
struct DeltaTerm {
    int gen = -1;
    Rational coeff;
};

struct ExchangeRule {
    std::vector<ExchTerm> terms;
    std::vector<DeltaTerm> delta;
    bool series_complete = true;  // false when fk is a truncation of an infinite series
};

struct ExchangeAlgebra {
    Orientation orient = Orientation::laurent_down;
    std::vector<std::string> gens;
    std::vector<std::vector<ExchangeRule>> rule;  // [a][b], complete over ordered pairs

    int ngen() const { return static_cast<int>(gens.size()); }
    int gen_index(const std::string& name) const;
};

// Weight of a creation letter (word grading).
inline int letter_weight(Orientation o, const Letter& l) {
    return o == Orientation::laurent_down ? static_cast<int>(-l.mode) : static_cast<int>(l.mode);
}
inline bool is_creation(Orientation o, std::int64_t mode) {
    return o == Orientation::laurent_down ? mode <= -1 : mode >= 1;
}

// Universal vacuum-type module: the span of creation-mode words of weight
// <= maxdeg, modulo all relation instances reachable inside the truncation.
// Mode operators act by lazy normal ordering; infinite rule tails truncate on
// every graded vector.
class ExchangeModule {
  public:
    ExchangeModule(ExchangeAlgebra alg, int maxdeg);

    const ExchangeAlgebra& algebra() const { return alg_; }
    int maxdeg() const { return maxdeg_; }
    int label_count() const { return static_cast<int>(words_.size()); }
    int label_degree(std::int32_t id) const { return degrees_[static_cast<std::size_t>(id)]; }
    const Word& label_word(std::int32_t id) const { return words_[static_cast<std::size_t>(id)]; }
    std::string label_name(std::int32_t id) const;
    std::int32_t vacuum() const { return 0; }
    int vec_degree(const ModVec& v) const;  // max component degree, -1 for 0

    // free-span action (no quotient): throws OutOfTruncation past the cap
    ModVec act_free(Letter l, const ModVec& v) const;
    ModVec eval_word(const Word& w) const;

    // quotient interface
    const GradedQuotient& quotient() const { return quot_; }
    ModVec reduce(const ModVec& v) const { return quot_.reduce(v); }
    ModVec act(Letter l, const ModVec& v) const { return reduce(act_free(l, v)); }
    std::vector<std::int64_t> graded_dims() const { return quot_.dims(); }

    struct RelationCheck {
        bool pass = true;
        long checked = 0, skipped = 0;
        std::string witness;
    };
    // post-quotient verification of every defining relation instance with
    // modes in [mode_lo, mode_hi] against all quotient basis vectors
    RelationCheck verify_relations(std::int64_t mode_lo, std::int64_t mode_hi) const;

    // vacuum (resp. co-vacuum) annihilation re-assertion post-quotient
    bool verify_annihilation(std::int64_t span) const;

  private:
    ExchangeAlgebra alg_;
    int maxdeg_;
    std::vector<Word> words_;
    std::vector<int> degrees_;
    std::map<Word, std::int32_t> index_;
    GradedQuotient quot_;
    mutable std::map<std::pair<Letter, Word>, ModVec> memo_;

    ModVec act_word(Letter l, const Word& w) const;
    ModVec exchange(Letter l, const Word& w) const;  // l annihilating, w nonempty
    void build_labels();
    void build_quotient();
    ModVec rhs_of_rule(int agen, std::int64_t m, int bgen, std::int64_t n, const ModVec& tail) const;
};

std::string word_name(const ExchangeAlgebra& alg, const Word& w);

}  // namespace vertexforge
