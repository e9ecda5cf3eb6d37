#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fm {

constexpr int kMaxVars = 16;
using Exponent = std::array<std::int8_t, kMaxVars>;

Exponent make_exponent(const std::vector<int> &e);
Exponent operator+(const Exponent &a, const Exponent &b);
Exponent operator-(const Exponent &a, const Exponent &b);
int total_degree(const Exponent &e, int nvars);

// Laurent polynomial with integer coefficients; zero coefficients never stored
class Poly {
public:
    using Terms = std::map<Exponent, long long>;

    Poly() = default;
    explicit Poly(int nvars);
    static Poly constant(int nvars, long long c);
    static Poly monomial(int nvars, const Exponent &e, long long c = 1);
    static Poly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Exponent &e) const;
    long long coefficient_sum() const;
    void add_term(const Exponent &e, long long c);

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly scaled(const Exponent &e, long long c) const;
    bool operator==(const Poly &o) const { return terms_ == o.terms_; }

    // throws InexactDivision when d does not divide *this in the Laurent ring
    Poly exact_div(const Poly &d) const;

    // terms sorted by total degree, then exponent of the second variable, then y1 first
    std::string str(const std::string &var = "y") const;
    std::string str(const std::vector<std::string> &names) const;

private:
    int nvars_ = 0;
    Terms terms_;
};

// y^e for a vector of nonnegative exponents
Poly y_monomial(const std::vector<int> &e);

}  // namespace fm
