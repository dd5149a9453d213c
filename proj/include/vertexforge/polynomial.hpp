#pragma once

#include <map>
#include <vector>

#include "vertexforge/series.hpp"

namespace vertexforge {

// Sparse polynomial with rational coefficients in roster variables
// (engine usage stays within two variables; the container is generic).
struct Poly {
    std::vector<Var> vars;  // sorted roster order
    std::map<Expo, Rational> coeff;

    bool is_zero() const { return coeff.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    int var_index(Var v) const;
    std::int64_t degree(Var v) const;  // -1 for the zero polynomial
    std::int64_t min_degree(Var v) const;
    std::string str() const;

    static Poly zero();
    static Poly constant(Rational c);
    static Poly variable(Var v);
    static Poly monomial(std::vector<Var> vars, Expo e, Rational c);
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_pow(const Poly& a, long e);  // e >= 0

bool poly_equal(const Poly& a, const Poly& b);

// Substitute v := g (polynomial composition).
Poly poly_subst(const Poly& a, Var v, const Poly& g);

// Leading term in graded lex order (total degree first, then exponent lex).
std::pair<Expo, Rational> poly_leading(const Poly& a);

// Exact division; throws std::domain_error when b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// GCD for polynomials in at most two variables (primitive PRS; result has
// graded-lex-monic normalization).
Poly poly_gcd(const Poly& a, const Poly& b);

RSeries poly_to_series(const Poly& a);

// ---------------------------------------------------------------------------

struct RationalFunction {
    Poly num = Poly::zero();
    Poly den = Poly::constant(Rational(1));

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_constant(); }
    std::string str() const;

    static RationalFunction from_poly(Poly p);
    static RationalFunction constant(Rational c) { return from_poly(Poly::constant(std::move(c))); }
};

RationalFunction rf_normalize(Poly num, Poly den);
RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_neg(const RationalFunction& a);
RationalFunction rf_inv(const RationalFunction& a);
RationalFunction rf_pow(const RationalFunction& a, long e);  // any integer e
RationalFunction rf_subst(const RationalFunction& a, Var v, const Poly& g);
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

// Value at a point, all variables substituted; throws on pole.
Rational rf_eval(const RationalFunction& a, const std::map<Var, Rational>& point);

// Parses +, -, *, /, ^ expressions over the variable roster; free identifiers
// must be bound to rational constants in `consts`.
RationalFunction rf_parse(const std::string& text, const std::map<std::string, Rational>& consts = {});

}  // namespace vertexforge
