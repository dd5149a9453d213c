#include "vertexforge/modealg.hpp"

#include <algorithm>

namespace vertexforge {

int ExchangeAlgebra::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string word_name(const ExchangeAlgebra& alg, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += " ";
        out += alg.gens[static_cast<std::size_t>(l.gen)] + "(" + std::to_string(l.mode) + ")";
    }
    return out;
}

std::string ExchangeModule::label_name(std::int32_t id) const {
    return word_name(alg_, words_[static_cast<std::size_t>(id)]);
}

int ExchangeModule::vec_degree(const ModVec& v) const {
    int d = -1;
    for (const auto& [id, c] : v.c) d = std::max(d, label_degree(id));
    return d;
}

ExchangeModule::ExchangeModule(ExchangeAlgebra alg, int maxdeg)
    : alg_(std::move(alg)), maxdeg_(maxdeg) {
    if (alg_.rule.size() != static_cast<std::size_t>(alg_.ngen()))
        throw std::invalid_argument("exchange algebra: incomplete rule table");
    for (const auto& row : alg_.rule)
        if (row.size() != static_cast<std::size_t>(alg_.ngen()))
            throw std::invalid_argument("exchange algebra: incomplete rule table");
    build_labels();
    build_quotient();
}

void ExchangeModule::build_labels() {
    // graded-lex enumeration: by degree, then word length, then letter sequence
    std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(maxdeg_) + 1);
    by_degree[0].push_back({});
    // generate words recursively: all sequences of creation letters
    std::vector<Word> frontier = {{}};
    std::vector<Word> all = {{}};
    for (int len = 1; len <= maxdeg_; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            int wd = 0;
            for (const Letter& l : w) wd += letter_weight(alg_.orient, l);
            for (int g = 0; g < alg_.ngen(); ++g)
                for (int wt = 1; wt + wd <= maxdeg_; ++wt) {
                    Letter l{static_cast<std::int16_t>(g),
                             alg_.orient == Orientation::laurent_down ? -wt : wt};
                    Word nw;
                    nw.reserve(w.size() + 1);
                    nw.push_back(l);
                    nw.insert(nw.end(), w.begin(), w.end());
                    next.push_back(nw);
                }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    auto weight_of = [&](const Word& w) {
        int d = 0;
        for (const Letter& l : w) d += letter_weight(alg_.orient, l);
        return d;
    };
    std::sort(all.begin(), all.end(), [&](const Word& a, const Word& b) {
        int da = weight_of(a), db = weight_of(b);
        if (da != db) return da < db;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    words_ = std::move(all);
    degrees_.resize(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        degrees_[i] = weight_of(words_[i]);
        index_.emplace(words_[i], static_cast<std::int32_t>(i));
    }
}

ModVec ExchangeModule::act_free(Letter l, const ModVec& v) const {
    ModVec out;
    for (const auto& [id, c] : v.c) {
        ModVec part = act_word(l, words_[static_cast<std::size_t>(id)]);
        coeff_axpy(out, c, part);
    }
    return out;
}

ModVec ExchangeModule::eval_word(const Word& w) const {
    ModVec v = ModVec::unit(vacuum());
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act_free(*it, v);
    return v;
}

ModVec ExchangeModule::act_word(Letter l, const Word& w) const {
    auto key = std::make_pair(l, w);
    auto mit = memo_.find(key);
    if (mit != memo_.end()) return mit->second;
    ModVec out;
    if (is_creation(alg_.orient, l.mode)) {
        int d = letter_weight(alg_.orient, l);
        for (const Letter& t : w) d += letter_weight(alg_.orient, t);
        if (d > maxdeg_)
            throw OutOfTruncation("mode action leaves the degree-" + std::to_string(maxdeg_) +
                                  " truncation");
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(l);
        nw.insert(nw.end(), w.begin(), w.end());
        auto it = index_.find(nw);
        if (it == index_.end()) throw std::logic_error("act_word: missing label");
        out = ModVec::unit(it->second);
    } else if (w.empty()) {
        // annihilating mode against the (co)vacuum
        out = ModVec{};
    } else {
        out = exchange(l, w);
    }
    memo_.emplace(std::move(key), out);
    return out;
}

// RHS of the rule for a(m) b(n) applied to `tail` (a vector, already in the
// free span): exchange sums plus delta terms.
ModVec ExchangeModule::rhs_of_rule(int agen, std::int64_t m, int bgen, std::int64_t n,
                                   const ModVec& tail) const {
    const ExchangeRule& rule = alg_.rule[static_cast<std::size_t>(agen)][static_cast<std::size_t>(bgen)];
    int dtail = vec_degree(tail);
    ModVec out;
    if (dtail >= 0) {
        if (alg_.orient == Orientation::laurent_down) {
            // a(m) b(n) = sum_k f_k sum_j C(k,j)(-1)^j b'(n+k-j) a'(m+j) + delta
            std::int64_t kneed = dtail - m - n;
            for (const ExchTerm& t : rule.terms) {
                std::int64_t kmax = t.fk.empty() ? -1 : t.fk.rbegin()->first;
                if (!rule.series_complete && kneed > kmax)
                    throw std::domain_error("insufficient braiding-series truncation order (need " +
                                            std::to_string(kneed) + ", have " + std::to_string(kmax) +
                                            ")");
                for (const auto& [k, fk] : t.fk) {
                    if (k > kneed) break;
                    for (std::int64_t j = 0; j <= k; ++j) {
                        Rational c = fk * binomial(static_cast<long>(k), static_cast<long>(j));
                        if (j % 2) c = -c;
                        if (is_zero(c)) continue;
                        ModVec inner = act_free(
                            Letter{static_cast<std::int16_t>(t.agen), static_cast<std::int32_t>(m + j)},
                            tail);
                        if (inner.empty()) continue;
                        ModVec swapped = act_free(Letter{static_cast<std::int16_t>(t.bgen),
                                                         static_cast<std::int32_t>(n + k - j)},
                                                  inner);
                        coeff_axpy(out, c, swapped);
                    }
                }
            }
        } else {
            // a(m) b(n) = f_0 b'(n) a'(m)
            //           + sum_{k>=1} f_k sum_{j>=0} C(k-1+j, j) b'(n+j) a'(m-k-j) + delta
            for (const ExchTerm& t : rule.terms) {
                std::int64_t kneed = m + dtail;  // a'(m-k-j) dies below -deg
                std::int64_t kmax = t.fk.empty() ? -1 : t.fk.rbegin()->first;
                if (!rule.series_complete && kneed > kmax)
                    throw std::domain_error("insufficient braiding-series truncation order (need " +
                                            std::to_string(kneed) + ", have " + std::to_string(kmax) +
                                            ")");
                for (const auto& [k, fk] : t.fk) {
                    if (k == 0) {
                        ModVec inner = act_free(
                            Letter{static_cast<std::int16_t>(t.agen), static_cast<std::int32_t>(m)},
                            tail);
                        if (!inner.empty()) {
                            ModVec swapped = act_free(
                                Letter{static_cast<std::int16_t>(t.bgen), static_cast<std::int32_t>(n)},
                                inner);
                            coeff_axpy(out, fk, swapped);
                        }
                        continue;
                    }
                    for (std::int64_t j = 0; m - k - j >= -dtail; ++j) {
                        Rational c = fk * binomial(static_cast<long>(k - 1 + j), static_cast<long>(j));
                        if (is_zero(c)) continue;
                        ModVec inner = act_free(Letter{static_cast<std::int16_t>(t.agen),
                                                       static_cast<std::int32_t>(m - k - j)},
                                                tail);
                        if (inner.empty()) continue;
                        ModVec swapped = act_free(
                            Letter{static_cast<std::int16_t>(t.bgen), static_cast<std::int32_t>(n + j)},
                            inner);
                        coeff_axpy(out, c, swapped);
                    }
                }
            }
        }
    }
    for (const DeltaTerm& d : rule.delta) {
        if (d.gen < 0) {
            if (m + n + 1 == 0) coeff_axpy(out, d.coeff, tail);
        } else {
            ModVec part = act_free(
                Letter{static_cast<std::int16_t>(d.gen), static_cast<std::int32_t>(m + n)}, tail);
            coeff_axpy(out, d.coeff, part);
        }
    }
    return out;
}

ModVec ExchangeModule::exchange(Letter l, const Word& w) const {
    Letter first = w.front();
    ModVec tail;
    {
        Word t(w.begin() + 1, w.end());
        auto it = index_.find(t);
        if (it == index_.end()) throw std::logic_error("exchange: missing tail label");
        tail = ModVec::unit(it->second);
    }
    return rhs_of_rule(l.gen, l.mode, first.gen, first.mode, tail);
}

void ExchangeModule::build_quotient() {
    quot_ = GradedQuotient(degrees_, maxdeg_);
    // structural instances: exchange an adjacent creation pair inside a word
    for (std::int32_t id = 0; id < label_count(); ++id) {
        const Word& w = words_[static_cast<std::size_t>(id)];
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            Word tail(w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
            auto tit = index_.find(tail);
            ModVec rhs = rhs_of_rule(w[p].gen, w[p].mode, w[p + 1].gen, w[p + 1].mode,
                                     ModVec::unit(tit->second));
            // prepend the prefix w[0..p)
            ModVec prefixed;
            for (const auto& [tid, c] : rhs.c) {
                Word full(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
                const Word& tw = words_[static_cast<std::size_t>(tid)];
                full.insert(full.end(), tw.begin(), tw.end());
                auto fit = index_.find(full);
                if (fit == index_.end()) throw std::logic_error("quotient: prefixed label missing");
                prefixed.c[fit->second] += c;
            }
            ModVec row = ModVec::unit(id);
            coeff_axpy(row, Rational(-1), prefixed);
            quot_.add_relation(std::move(row));
        }
    }
    // confluence instances: creation a(m) against annihilating b(n) on each
    // suffix label; nonzero discrepancies are closed under creation prefixes
    std::vector<ModVec> discrepancies;
    for (std::int32_t sid = 0; sid < label_count(); ++sid) {
        const Word& sfx = words_[static_cast<std::size_t>(sid)];
        int dsfx = degrees_[static_cast<std::size_t>(sid)];
        for (int ag = 0; ag < alg_.ngen(); ++ag)
            for (int bg = 0; bg < alg_.ngen(); ++bg) {
                for (std::int64_t am = 1; am <= maxdeg_; ++am) {
                    std::int64_t m = alg_.orient == Orientation::laurent_down ? -am : am;
                    for (std::int64_t bn = 0; bn <= dsfx + 1; ++bn) {
                        std::int64_t n = alg_.orient == Orientation::laurent_down ? bn : -bn;
                        ModVec lhs, rhs;
                        try {
                            ModVec mid = act_free(
                                Letter{static_cast<std::int16_t>(bg), static_cast<std::int32_t>(n)},
                                ModVec::unit(sid));
                            lhs = act_free(
                                Letter{static_cast<std::int16_t>(ag), static_cast<std::int32_t>(m)},
                                mid);
                            rhs = rhs_of_rule(ag, m, bg, n, ModVec::unit(sid));
                        } catch (const OutOfTruncation&) {
                            continue;  // instance not representable at this cap
                        }
                        ModVec row = mv_sub(lhs, rhs);
                        if (!row.empty()) discrepancies.push_back(std::move(row));
                    }
                }
            }
    }
    for (const ModVec& row : discrepancies) {
        int top = vec_degree(row);
        quot_.add_relation(row);
        // close under creation prefixes
        for (std::int32_t pid = 1; pid < label_count(); ++pid) {
            if (degrees_[static_cast<std::size_t>(pid)] + top > maxdeg_) continue;
            const Word& pw = words_[static_cast<std::size_t>(pid)];
            ModVec shifted;
            for (const auto& [tid, c] : row.c) {
                Word full = pw;
                const Word& tw = words_[static_cast<std::size_t>(tid)];
                full.insert(full.end(), tw.begin(), tw.end());
                auto fit = index_.find(full);
                if (fit == index_.end()) throw std::logic_error("quotient: prefixed label missing");
                shifted.c[fit->second] += c;
            }
            quot_.add_relation(std::move(shifted));
        }
    }
}

ExchangeModule::RelationCheck ExchangeModule::verify_relations(std::int64_t mode_lo,
                                                               std::int64_t mode_hi) const {
    RelationCheck out;
    std::vector<std::int32_t> basis = quot_.basis();
    for (int ag = 0; ag < alg_.ngen() && out.pass; ++ag)
        for (int bg = 0; bg < alg_.ngen() && out.pass; ++bg)
            for (std::int64_t m = mode_lo; m <= mode_hi && out.pass; ++m)
                for (std::int64_t n = mode_lo; n <= mode_hi && out.pass; ++n)
                    for (std::int32_t id : basis) {
                        ModVec w = ModVec::unit(id);
                        ModVec lhs, rhs;
                        try {
                            ModVec mid = act_free(
                                Letter{static_cast<std::int16_t>(bg), static_cast<std::int32_t>(n)}, w);
                            lhs = act_free(
                                Letter{static_cast<std::int16_t>(ag), static_cast<std::int32_t>(m)},
                                mid);
                            rhs = rhs_of_rule(ag, m, bg, n, w);
                        } catch (const OutOfTruncation&) {
                            ++out.skipped;
                            continue;
                        } catch (const std::domain_error&) {
                            ++out.skipped;
                            continue;
                        }
                        ++out.checked;
                        if (!(reduce(lhs) == reduce(rhs))) {
                            out.pass = false;
                            out.witness = alg_.gens[static_cast<std::size_t>(ag)] + "(" +
                                          std::to_string(m) + ")" +
                                          alg_.gens[static_cast<std::size_t>(bg)] + "(" +
                                          std::to_string(n) + ") on " + label_name(id);
                            break;
                        }
                    }
    return out;
}

bool ExchangeModule::verify_annihilation(std::int64_t span) const {
    for (int g = 0; g < alg_.ngen(); ++g)
        for (std::int64_t k = 0; k <= span; ++k) {
            std::int64_t mode = alg_.orient == Orientation::laurent_down ? k : -k;
            ModVec r = act(Letter{static_cast<std::int16_t>(g), static_cast<std::int32_t>(mode)},
                           ModVec::unit(vacuum()));
            if (!r.empty()) return false;
        }
    return true;
}

}  // namespace vertexforge
