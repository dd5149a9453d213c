#include "vertexforge/borcherds.hpp"

#include <algorithm>

namespace vertexforge {

void LieAlgebra::validate() const {
    int n = dim();
    if (static_cast<int>(bracket.size()) != n)
        throw std::invalid_argument("lie: bracket table size mismatch");
    auto entry = [&](int i, int j) {
        ModVec v;
        for (const auto& [k, c] : bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
            v.c[k] += c;
        for (auto it = v.c.begin(); it != v.c.end();)
            it = is_zero(it->second) ? v.c.erase(it) : std::next(it);
        return v;
    };
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(bracket[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("lie: bracket table size mismatch");
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                if (k < 0 || k >= n) throw std::invalid_argument("lie: bracket index out of range");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(mv_add(entry(i, j), entry(j, i)).empty()))
                throw std::invalid_argument("lie: bracket is not antisymmetric");
    // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
    auto ad = [&](int i, const ModVec& v) {
        ModVec out;
        for (const auto& [j, c] : v.c) coeff_axpy(out, c, entry(i, static_cast<int>(j)));
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ModVec acc;
                // [[i,j],k] = -[k,[i,j]]
                coeff_axpy(acc, Rational(-1), ad(k, entry(i, j)));
                coeff_axpy(acc, Rational(-1), ad(i, entry(j, k)));
                coeff_axpy(acc, Rational(-1), ad(j, entry(k, i)));
                if (!acc.empty()) throw std::invalid_argument("lie: Jacobi identity fails");
            }
}

LieAlgebra LieAlgebra::sl2() {
    LieAlgebra g;
    g.names = {"e", "f", "h"};
    g.bracket.assign(3, std::vector<std::vector<std::pair<int, Rational>>>(3));
    auto set = [&](int i, int j, int k, long c) {
        g.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {{k, Rational(c)}};
        g.bracket[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = {{k, Rational(-c)}};
    };
    set(0, 1, 2, 1);   // [e,f] = h
    set(2, 0, 0, 2);   // [h,e] = 2e
    set(2, 1, 1, -2);  // [h,f] = -2f
    g.validate();
    return g;
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> names) {
    LieAlgebra g;
    g.names = std::move(names);
    g.bracket.assign(g.names.size(),
                     std::vector<std::vector<std::pair<int, Rational>>>(g.names.size()));
    return g;
}

// ---------------------------------------------------------------------------

PbwModule::PbwModule(LieAlgebra g, int maxdeg) : g_(std::move(g)), maxdeg_(maxdeg) {
    g_.validate();
    // monomials: nondecreasing letter sequences ordered by (gen, depth), total depth <= maxdeg
    std::vector<Word> frontier = {{}};
    std::vector<Word> all = {{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            int wd = 0;
            for (const Letter& l : w) wd += l.mode;
            Letter minL = w.empty() ? Letter{0, 1} : w.back();
            for (int i = 0; i < g_.dim(); ++i)
                for (int s = 1; wd + s <= maxdeg_; ++s) {
                    Letter l{static_cast<std::int16_t>(i), s};
                    if (l < minL) continue;  // keep the word nondecreasing
                    Word nw = w;
                    nw.push_back(l);
                    next.push_back(std::move(nw));
                }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    auto weight_of = [](const Word& w) {
        int d = 0;
        for (const Letter& l : w) d += l.mode;
        return d;
    };
    std::sort(all.begin(), all.end(), [&](const Word& a, const Word& b) {
        int da = weight_of(a), db = weight_of(b);
        if (da != db) return da < db;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    mons_ = std::move(all);
    degrees_.resize(mons_.size());
    for (std::size_t i = 0; i < mons_.size(); ++i) {
        degrees_[i] = weight_of(mons_[i]);
        index_.emplace(mons_[i], static_cast<std::int32_t>(i));
    }
}

std::string PbwModule::label_name(std::int32_t id) const {
    const Word& w = mons_[static_cast<std::size_t>(id)];
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += " ";
        out += g_.names[static_cast<std::size_t>(l.gen)] + "[-" + std::to_string(l.mode) + "]";
    }
    return out;
}

int PbwModule::vec_degree(const ModVec& v) const {
    int d = -1;
    for (const auto& [id, c] : v.c) d = std::max(d, label_degree(id));
    return d;
}

ModVec PbwModule::mult_letter_word(Letter l, const Word& w) const {
    auto key = std::make_pair(l, w);
    auto mit = memo_.find(key);
    if (mit != memo_.end()) return mit->second;
    ModVec out;
    int wd = 0;
    for (const Letter& t : w) wd += t.mode;
    if (wd + l.mode > maxdeg_)
        throw OutOfTruncation("pbw: product leaves the degree-" + std::to_string(maxdeg_) +
                              " truncation");
    if (w.empty() || !(w.front() < l)) {
        // sorted insertion at the front
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(l);
        nw.insert(nw.end(), w.begin(), w.end());
        auto it = index_.find(nw);
        if (it == index_.end()) throw std::logic_error("pbw: missing monomial");
        out = ModVec::unit(it->second);
    } else {
        // l > head: l*(H*rest) = H*(l*rest) + [l,H]*rest
        Letter head = w.front();
        Word rest(w.begin() + 1, w.end());
        ModVec lr = mult_letter_word(l, rest);
        for (const auto& [id, c] : lr.c) {
            ModVec part = mult_letter_word(head, mons_[static_cast<std::size_t>(id)]);
            coeff_axpy(out, c, part);
        }
        for (const auto& [k, c] :
             g_.bracket[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(head.gen)]) {
            Letter lk{static_cast<std::int16_t>(k), l.mode + head.mode};
            ModVec part = mult_letter_word(lk, rest);
            coeff_axpy(out, c, part);
        }
    }
    memo_.emplace(std::move(key), out);
    return out;
}

ModVec PbwModule::mult_letter(int i, int s, const ModVec& v) const {
    ModVec out;
    for (const auto& [id, c] : v.c) {
        ModVec part = mult_letter_word(Letter{static_cast<std::int16_t>(i), s},
                                       mons_[static_cast<std::size_t>(id)]);
        coeff_axpy(out, c, part);
    }
    return out;
}

ModVec PbwModule::mult_basis(std::int32_t id, const ModVec& v) const {
    const Word& w = mons_[static_cast<std::size_t>(id)];
    ModVec out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = mult_letter(it->gen, it->mode, out);
    return out;
}

ModVec PbwModule::mult(const ModVec& a, const ModVec& b) const {
    ModVec out;
    for (const auto& [id, c] : a.c) coeff_axpy(out, c, mult_basis(id, b));
    return out;
}

ModVec PbwModule::derive(const ModVec& v) const {
    // d/dt (a (x) t^{-s}) = -s (a (x) t^{-s-1}); Leibniz over the word
    ModVec out;
    for (const auto& [id, c] : v.c) {
        const Word& w = mons_[static_cast<std::size_t>(id)];
        for (std::size_t p = 0; p < w.size(); ++p) {
            ModVec term = ModVec::unit(vacuum());
            for (std::size_t r = w.size(); r-- > 0;) {
                Letter l = w[r];
                if (r == p) l.mode += 1;
                term = mult_letter(l.gen, l.mode, term);
            }
            coeff_axpy(out, c * Rational(-w[p].mode), term);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ModVec DiffAlgebra::mul(const ModVec& a, const ModVec& b) const {
    ModVec out;
    for (const auto& [ia, ca] : a.c)
        for (const auto& [ib, cb] : b.c) coeff_axpy(out, ca * cb, mul_basis(ia, ib));
    return out;
}

int DiffAlgebra::vec_degree(const ModVec& v) const {
    int d = -1;
    for (const auto& [id, c] : v.c) d = std::max(d, degree(id));
    return d;
}

void DiffAlgebra::validate() const {
    for (std::int32_t a = 0; a < label_count; ++a) {
        // unit laws
        try {
            if (!(mul_basis(unit, a) == ModVec::unit(a)) || !(mul_basis(a, unit) == ModVec::unit(a)))
                throw std::invalid_argument("diff algebra: unit law fails");
        } catch (const OutOfTruncation&) {
        }
        for (std::int32_t b = 0; b < label_count; ++b) {
            // Leibniz
            try {
                ModVec lhs = derive(mul_basis(a, b));
                ModVec rhs = mv_add(mul(derive(ModVec::unit(a)), ModVec::unit(b)),
                                    mul(ModVec::unit(a), derive(ModVec::unit(b))));
                if (!(lhs == rhs)) throw std::invalid_argument("diff algebra: Leibniz fails");
            } catch (const OutOfTruncation&) {
            }
            for (std::int32_t c = 0; c < label_count; ++c) {
                try {
                    ModVec lhs = mul(mul_basis(a, b), ModVec::unit(c));
                    ModVec rhs = mul(ModVec::unit(a), mul_basis(b, c));
                    if (!(lhs == rhs))
                        throw std::invalid_argument("diff algebra: associativity fails");
                } catch (const OutOfTruncation&) {
                }
            }
        }
    }
}

DiffAlgebra diff_poly_ring(int maxdeg) {
    DiffAlgebra A;
    A.maxdeg = maxdeg;
    A.unit = 0;
    A.label_count = maxdeg + 1;  // basis y^k
    A.degree = [](std::int32_t id) { return static_cast<int>(id); };
    A.name = [](std::int32_t id) { return id == 0 ? std::string("1") : "y^" + std::to_string(id); };
    A.mul_basis = [maxdeg](std::int32_t a, std::int32_t b) {
        if (a + b > maxdeg) throw OutOfTruncation("poly ring: degree cap");
        return ModVec::unit(a + b);
    };
    A.derive = [](const ModVec& v) {
        ModVec out;
        for (const auto& [id, c] : v.c)
            if (id > 0) out.c[id - 1] += c * Rational(id);
        return out;
    };
    return A;
}

DiffAlgebra diff_half_currents(std::shared_ptr<PbwModule> m) {
    DiffAlgebra A;
    A.maxdeg = m->maxdeg();
    A.unit = m->vacuum();
    A.label_count = m->label_count();
    A.degree = [m](std::int32_t id) { return m->label_degree(id); };
    A.name = [m](std::int32_t id) { return m->label_name(id); };
    A.mul_basis = [m](std::int32_t a, std::int32_t b) { return m->mult_basis(a, ModVec::unit(b)); };
    A.derive = [m](const ModVec& v) { return m->derive(v); };
    return A;
}

DiffAlgebra diff_free_boson(int colors, int maxdeg) {
    std::vector<std::string> names;
    for (int i = 0; i < colors; ++i) names.push_back("b" + std::to_string(i + 1));
    auto m = std::make_shared<PbwModule>(LieAlgebra::abelian(std::move(names)), maxdeg);
    return diff_half_currents(std::move(m));
}

std::vector<ModVec> vad_vertex_map(const DiffAlgebra& A, const ModVec& a, const ModVec& b,
                                   int order) {
    std::vector<ModVec> out;
    ModVec dka = a;
    Rational fact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            dka = A.derive(dka);
            fact *= Rational(k);
        }
        out.push_back(A.mul(mv_scale(dka, Rational(1) / fact), b));
    }
    return out;
}

ModVec half_current_coeff(const PbwModule& m, int i, int n, const ModVec& v) {
    if (n < 0) return ModVec{};
    ModVec out = m.mult_letter(i, n + 1, v);
    return (n % 2) ? mv_scale(out, Rational(-1)) : out;
}

HalfCurrentCheck check_half_current_relation(const PbwModule& m, int a, int b, Iv w1, Iv w2) {
    HalfCurrentCheck out;
    ModVec brkt;
    for (const auto& [k, c] :
         m.lie().bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        brkt.c[k] += c;
    for (std::int32_t wid = 0; wid < m.label_count() && out.pass; ++wid) {
        ModVec w = ModVec::unit(wid);
        for (std::int64_t e1 = std::max<std::int64_t>(0, w1.lo); e1 <= w1.hi && out.pass; ++e1)
            for (std::int64_t e2 = std::max<std::int64_t>(0, w2.lo); e2 <= w2.hi; ++e2) {
                // coefficient of x1^{e1} x2^{e2}
                ModVec acc;
                try {
                    acc = half_current_coeff(m, a, static_cast<int>(e1),
                                             half_current_coeff(m, b, static_cast<int>(e2), w));
                    coeff_axpy(acc, Rational(-1),
                               half_current_coeff(m, b, static_cast<int>(e2),
                                                  half_current_coeff(m, a, static_cast<int>(e1), w)));
                    // The bracket part [a,b](x1)- - [a,b](x2)- is exactly
                    // divisible by (x2-x1), so every expansion of the kernel
                    // gives the same table:
                    //   (x2-x1)^{-1}([a,b](x1)- - [a,b](x2)-)
                    //     = sum_{s>=1} (-1)^{s-1} ([a,b] (x) t^{-s-1}) h_{s-1}(x1,x2),
                    // with h_{s-1} the complete homogeneous sum; the (e1,e2)
                    // coefficient comes from the single term s = e1+e2+1.
                    {
                        int s = static_cast<int>(e1 + e2 + 1);
                        for (const auto& [k, c] : brkt.c) {
                            ModVec part = m.mult_letter(static_cast<int>(k), s + 1, w);
                            Rational coeff = c * Rational((s % 2) ? 1 : -1);  // (-1)^{s-1}
                            coeff_axpy(acc, -coeff, part);                    // subtract the RHS
                        }
                    }
                } catch (const OutOfTruncation&) {
                    continue;
                }
                ++out.cells;
                if (!acc.empty()) {
                    out.pass = false;
                    out.witness = "coefficient x1^" + std::to_string(e1) + " x2^" +
                                  std::to_string(e2) + " on " + m.label_name(wid);
                    break;
                }
            }
    }
    return out;
}

}  // namespace vertexforge
