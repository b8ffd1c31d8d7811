#pragma once

#include "numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace reprlab {

// Sparse multivariate polynomial with exact rational coefficients. Canonical
// form: no zero coefficients stored. The variable names are supplied when
// printing.
class MultivarPoly {
public:
    using Monomial = std::vector<int>;

    MultivarPoly() = default;
    explicit MultivarPoly(int nvars) : nvars_(nvars) {}
    MultivarPoly(int nvars, const Rational& c) : nvars_(nvars) {
        if (c != 0) terms_[Monomial(nvars, 0)] = c;
    }
    static MultivarPoly variable(int nvars, int index, int power = 1) {
        MultivarPoly p(nvars);
        Monomial m(nvars, 0);
        m[index] = power;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    int total_degree() const;

    MultivarPoly& operator+=(const MultivarPoly& o);
    MultivarPoly& operator-=(const MultivarPoly& o);
    MultivarPoly operator+(const MultivarPoly& o) const;
    MultivarPoly operator-(const MultivarPoly& o) const;
    MultivarPoly operator*(const MultivarPoly& o) const;
    MultivarPoly operator-() const;
    MultivarPoly operator*(const Rational& c) const;
    bool operator==(const MultivarPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultivarPoly& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const Rational& c);

    // Substitute x_i -> -x_i for the flagged variables.
    MultivarPoly negate_vars(const std::vector<bool>& flip) const;
    MultivarPoly homogeneous_part(int degree) const;
    Rational evaluate(const std::vector<Rational>& values) const;

    // Coefficients that are not in (1/denominator) * Z.
    bool coefficients_in_half_integers() const;
    std::vector<std::pair<Monomial, Rational>> negative_coefficients() const;

    // Deterministic text form: graded-lex monomial order, e.g.
    // "-1/2*p^2 + p*q + 1/2*p".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

} // namespace reprlab
