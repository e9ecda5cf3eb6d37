#include "foldmatch/poly.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "foldmatch/geometry.hpp"

namespace fm {

namespace {

std::int8_t narrow(int v) {
    if (v < std::numeric_limits<std::int8_t>::min() || v > std::numeric_limits<std::int8_t>::max())
        throw Error(ErrorCode::Overflow, "exponent out of range");
    return static_cast<std::int8_t>(v);
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient overflow");
    return r;
}

}  // namespace

Exponent make_exponent(const std::vector<int> &e) {
    if (e.size() > static_cast<size_t>(kMaxVars)) throw Error(ErrorCode::Overflow, "too many variables");
    Exponent x{};
    for (size_t i = 0; i < e.size(); ++i) x[i] = narrow(e[i]);
    return x;
}

Exponent operator+(const Exponent &a, const Exponent &b) {
    Exponent r{};
    for (int i = 0; i < kMaxVars; ++i) r[i] = narrow(a[i] + b[i]);
    return r;
}

Exponent operator-(const Exponent &a, const Exponent &b) {
    Exponent r{};
    for (int i = 0; i < kMaxVars; ++i) r[i] = narrow(a[i] - b[i]);
    return r;
}

int total_degree(const Exponent &e, int nvars) {
    int s = 0;
    for (int i = 0; i < nvars; ++i) s += e[i];
    return s;
}

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw Error(ErrorCode::Overflow, "too many variables");
}

Poly Poly::constant(int nvars, long long c) {
    Poly p(nvars);
    p.add_term(Exponent{}, c);
    return p;
}

Poly Poly::monomial(int nvars, const Exponent &e, long long c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    Exponent e{};
    e[i] = 1;
    return monomial(nvars, e);
}

long long Poly::coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

long long Poly::coefficient_sum() const {
    long long s = 0;
    for (auto &[e, c] : terms_) s = checked_add(s, c);
    return s;
}

void Poly::add_term(const Exponent &e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Poly &Poly::operator+=(const Poly &o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly &o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    Poly r(std::max(nvars_, o.nvars_));
    for (auto &[e1, c1] : terms_)
        for (auto &[e2, c2] : o.terms_) r.add_term(e1 + e2, checked_mul(c1, c2));
    return r;
}

Poly Poly::scaled(const Exponent &e, long long c) const {
    Poly r(nvars_);
    for (auto &[e1, c1] : terms_) r.add_term(e1 + e, checked_mul(c1, c));
    return r;
}

Poly Poly::exact_div(const Poly &d) const {
    if (d.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero");
    int nv = std::max(nvars_, d.nvars_);
    Poly q(nv);
    if (is_zero()) return q;
    // Newton box of the quotient
    Exponent lo{}, hi{};
    for (int i = 0; i < kMaxVars; ++i) {
        int alo = 127, ahi = -128, dlo = 127, dhi = -128;
        for (auto &[e, c] : terms_) alo = std::min<int>(alo, e[i]), ahi = std::max<int>(ahi, e[i]);
        for (auto &[e, c] : d.terms_) dlo = std::min<int>(dlo, e[i]), dhi = std::max<int>(dhi, e[i]);
        if (alo - dlo > ahi - dhi) throw Error(ErrorCode::InexactDivision, "quotient box empty");
        lo[i] = narrow(alo - dlo);
        hi[i] = narrow(ahi - dhi);
    }
    auto [lde, ldc] = *d.terms_.rbegin();
    Poly r = *this;
    while (!r.is_zero()) {
        auto [re, rc] = *r.terms_.rbegin();
        if (rc % ldc != 0) throw Error(ErrorCode::InexactDivision, "coefficient does not divide");
        Exponent qe = re - lde;
        for (int i = 0; i < kMaxVars; ++i)
            if (qe[i] < lo[i] || qe[i] > hi[i]) throw Error(ErrorCode::InexactDivision, "remainder left over");
        long long qc = rc / ldc;
        q.add_term(qe, qc);
        r -= d.scaled(qe, qc);
    }
    return q;
}

std::string Poly::str(const std::string &var) const {
    std::vector<std::string> names;
    for (int i = 0; i < nvars_; ++i) names.push_back(var + std::to_string(i + 1));
    return str(names);
}

std::string Poly::str(const std::vector<std::string> &names) const {
    if (is_zero()) return "0";
    int nv = static_cast<int>(names.size());
    std::vector<std::pair<Exponent, long long>> ts(terms_.begin(), terms_.end());
    // degree, then power of the second variable, then y1 before y2 before ...
    auto key = [&](const Exponent &e) { return std::make_pair(total_degree(e, nv), nv > 1 ? e[1] : 0); };
    std::stable_sort(ts.begin(), ts.end(), [&](auto &x, auto &y) {
        if (key(x.first) != key(y.first)) return key(x.first) < key(y.first);
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (auto &[e, c] : ts) {
        std::string mono;
        for (int i = 0; i < nv; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        long long a = c < 0 ? -c : c;
        std::string term;
        if (mono.empty()) term = std::to_string(a);
        else if (a == 1) term = mono;
        else term = std::to_string(a) + "*" + mono;
        if (first) out += (c < 0 ? "-" : "") + term;
        else out += (c < 0 ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

Poly y_monomial(const std::vector<int> &e) {
    return Poly::monomial(static_cast<int>(e.size()), make_exponent(e));
}

}  // namespace fm
