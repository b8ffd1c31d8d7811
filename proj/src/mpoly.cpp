#include "mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reprlab {

int MultivarPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

void MultivarPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultivarPoly& MultivarPoly::operator+=(const MultivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultivarPoly& MultivarPoly::operator-=(const MultivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultivarPoly MultivarPoly::operator+(const MultivarPoly& o) const {
    MultivarPoly r = *this;
    r += o;
    return r;
}

MultivarPoly MultivarPoly::operator-(const MultivarPoly& o) const {
    MultivarPoly r = *this;
    r -= o;
    return r;
}

MultivarPoly MultivarPoly::operator*(const MultivarPoly& o) const {
    MultivarPoly r(nvars_);
    Monomial m(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

MultivarPoly MultivarPoly::operator-() const {
    MultivarPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MultivarPoly MultivarPoly::operator*(const Rational& c) const {
    MultivarPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
}

MultivarPoly MultivarPoly::negate_vars(const std::vector<bool>& flip) const {
    MultivarPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int odd = 0;
        for (int i = 0; i < nvars_; ++i)
            if (flip[i]) odd += m[i];
        r.terms_[m] = (odd % 2 == 0) ? c : -c;
    }
    return r;
}

MultivarPoly MultivarPoly::homogeneous_part(int degree) const {
    MultivarPoly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) == degree) r.terms_[m] = c;
    return r;
}

Rational MultivarPoly::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= values[i];
        total += t;
    }
    return total;
}

bool MultivarPoly::coefficients_in_half_integers() const {
    for (const auto& [m, c] : terms_)
        if (denominator(c) != 1 && denominator(c) != 2) return false;
    return true;
}

std::vector<std::pair<MultivarPoly::Monomial, Rational>> MultivarPoly::negative_coefficients()
    const {
    std::vector<std::pair<Monomial, Rational>> out;
    for (const auto& [m, c] : terms_)
        if (c < 0) out.emplace_back(m, c);
    return out;
}

std::string MultivarPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // Graded lex, highest degree first.
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = std::any_of(t->first.begin(), t->first.end(), [](int e) { return e > 0; });
        bool coeff_shown = !(c == 1 && has_var);
        if (coeff_shown) os << c.str();
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars_; ++i) {
            if (t->first[i] == 0) continue;
            if (need_star) os << '*';
            os << names[i];
            if (t->first[i] > 1) os << '^' << t->first[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace reprlab
