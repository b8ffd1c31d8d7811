#include "fqmatrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace reprlab {

namespace {

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Factor q = p^e for prime p, or return false.
bool prime_power(int q, int& p, int& e) {
    for (int cand = 2; cand <= q; ++cand) {
        if (!is_prime(cand)) continue;
        int v = q, ee = 0;
        while (v % cand == 0) { v /= cand; ++ee; }
        if (v == 1) { p = cand; e = ee; return true; }
        if (q % cand == 0) return false;
    }
    return false;
}

} // namespace

Fq::Fq(int q) : q_(q) {
    int p = 0, e = 0;
    if (!prime_power(q, p, e)) throw DomainError("q must be a prime power");
    if (q > 64) throw LimitError("field size cap is 64");
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    if (e == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[a] = (q - a) % q;
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = (a + b) % q;
                mul_[a * q + b] = (a * b) % q;
            }
        }
        return;
    }
    // Elements are base-p digit strings of length e, i.e. polynomials over
    // F_p modulo a monic irreducible found by scanning.
    auto digits = [&](int v) {
        std::vector<int> d(e);
        for (int i = 0; i < e; ++i) { d[i] = v % p; v /= p; }
        return d;
    };
    auto value = [&](const std::vector<int>& d) {
        int v = 0;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + (i < e ? d[i] : 0);
        return v;
    };
    auto polmulmod = [&](const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& mod) {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        for (int i = static_cast<int>(r.size()) - 1; i >= e; --i) {
            int c = r[i];
            if (!c) continue;
            r[i] = 0;
            for (int t = 0; t < e; ++t) r[i - e + t] = ((r[i - e + t] - c * mod[t]) % p + p * p) % p;
        }
        r.resize(e);
        return r;
    };
    // Find a monic irreducible x^e + m_{e-1} x^{e-1} + ... + m_0: no root
    // test is not enough for e > 3, so test irreducibility by checking that
    // no element generates a proper factor -- for e <= 3 root-freeness does
    // suffice, and we cap e there.
    if (e > 3) throw LimitError("prime power fields supported up to cube exponents");
    std::vector<int> mod(e, 0);
    auto eval = [&](const std::vector<int>& m, int x) {
        int acc = 1 % p; // x^e coefficient
        for (int i = e - 1; i >= 0; --i) acc = (acc * x + m[i]) % p;
        return acc;
    };
    bool found = false;
    for (int code = 0; code < q && !found; ++code) {
        std::vector<int> m = digits(code);
        bool rootfree = true;
        for (int x = 0; x < p && rootfree; ++x)
            if (eval(m, x) == 0) rootfree = false;
        if (rootfree) { mod = m; found = true; }
    }
    if (!found) throw DomainError("no irreducible polynomial found");
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<int> nd(e);
        for (int i = 0; i < e; ++i) nd[i] = (p - da[i]) % p;
        neg_[a] = value(nd);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> s(e);
            for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = value(s);
            mul_[a * q + b] = value(polmulmod(da, db, mod));
        }
    }
}

int Fq::inv(int a) const {
    if (a == 0) throw DomainError("zero has no inverse");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw DomainError("inverse not found");
}

std::shared_ptr<const Fq> Fq::of(int q) {
    static std::map<int, std::shared_ptr<const Fq>> cache;
    static std::mutex mx;
    std::lock_guard lk(mx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const Fq>(new Fq(q));
    cache.emplace(q, f);
    return f;
}

FqMatrix::FqMatrix(int n, std::shared_ptr<const Fq> field)
    : n_(n), field_(std::move(field)), a_(static_cast<size_t>(n) * (n - 1) / 2, 0) {}

int FqMatrix::index(int i, int j) const {
    // Row-major over strictly upper cells: row i (1-based) holds n-i cells.
    int before = (i - 1) * n_ - (i - 1) * i / 2;
    return before + (j - i - 1);
}

int FqMatrix::get(int i, int j) const {
    if (i == j) return 1;
    if (i > j) return 0;
    return a_[index(i, j)];
}

void FqMatrix::set(int i, int j, int v) {
    if (i >= j) throw DomainError("only strictly upper entries are stored");
    a_[index(i, j)] = v;
}

FqMatrix FqMatrix::multiply(const FqMatrix& o) const {
    FqMatrix r(n_, field_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            int acc = 0;
            for (int k = i; k <= j; ++k) acc = field_->add(acc, field_->mul(get(i, k), o.get(k, j)));
            r.set(i, j, acc);
        }
    return r;
}

unsigned long long FqMatrix::encode() const {
    unsigned long long code = 0;
    for (auto it = a_.rbegin(); it != a_.rend(); ++it) code = code * field_->q() + *it;
    return code;
}

FqMatrix FqMatrix::decode(int n, std::shared_ptr<const Fq> field, unsigned long long code) {
    FqMatrix m(n, field);
    for (auto& v : m.a_) {
        v = static_cast<int>(code % field->q());
        code /= field->q();
    }
    return m;
}

unsigned long long FqMatrix::group_order(int n, int q) {
    unsigned long long r = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) r *= q;
    return r;
}

std::string FqMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) os << get(i, j) << (j == n_ ? "" : " ");
        os << '\n';
    }
    return os.str();
}

Canonicalized canonicalize(const FqMatrix& a) {
    FqMatrix m = a;
    int n = m.n();
    std::vector<std::pair<int, int>> arcs;
    // Sweep diagonals from the upper-right corner inwards; a nonzero entry
    // becomes an arc pivot: normalize to 1, clear leftwards in its row and
    // downwards in its column (the singular positions of the growing pi).
    for (int k = 1; k <= n - 1; ++k) {
        for (int i = 1; i <= k; ++i) {
            int j = n - k + i;
            if (j <= i) continue;
            if (m.get(i, j) == 0) continue;
            arcs.emplace_back(i, j);
            m.set(i, j, 1);
            for (int jj = i + 1; jj < j; ++jj) m.set(i, jj, 0);
            for (int ii = i + 1; ii < j; ++ii) m.set(ii, j, 0);
        }
    }
    return Canonicalized{SetPartition::from_arcs(n, arcs), std::move(m)};
}

SetPartition superclass_of(const FqMatrix& a) {
    // Work on X = A - 1 (strictly upper part of A, diagonal dropped).
    int n = a.n();
    const Fq& f = a.field();
    std::vector<std::vector<int>> x(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) x[i][j] = a.get(i, j);
    std::vector<std::pair<int, int>> arcs;
    for (int j = 1; j <= n; ++j) {
        int pivot = 0;
        for (int i = j - 1; i >= 1; --i)
            if (x[i][j] != 0) { pivot = i; break; }
        if (!pivot) continue;
        int c = x[pivot][j];
        int cinv = f.inv(c);
        // Clear above the pivot in column j (row ops adding row `pivot`).
        for (int i = 1; i < pivot; ++i) {
            if (x[i][j] == 0) continue;
            int factor = f.mul(x[i][j], cinv);
            for (int jj = j; jj <= n; ++jj)
                x[i][jj] = f.add(x[i][jj], f.neg(f.mul(factor, x[pivot][jj])));
        }
        // Clear to the right in row `pivot` (column ops adding column j).
        for (int jj = j + 1; jj <= n; ++jj) {
            if (x[pivot][jj] == 0) continue;
            int factor = f.mul(x[pivot][jj], cinv);
            for (int i = 1; i <= pivot; ++i)
                x[i][jj] = f.add(x[i][jj], f.neg(f.mul(factor, x[i][j])));
        }
        arcs.emplace_back(pivot, j);
    }
    return SetPartition::from_arcs(n, arcs);
}

bool in_fiber(const FqMatrix& a, const SetPartition& pi) {
    if (a.n() != pi.n()) return false;
    RegularSingular rs = regular_singular(pi);
    for (auto [i, j] : pi.arcs())
        if (a.get(i, j) == 0) return false;
    for (auto [i, j] : rs.regular)
        if (!pi.has_arc(i, j) && a.get(i, j) != 0) return false;
    return true;
}

} // namespace reprlab
