#pragma once

#include <optional>
#include <string>
#include <vector>

namespace splicekit {

// Symmetric Alexander polynomial, coefficients ascending, normalized up to units
// (trailing/leading zeros stripped, sign so the leading coefficient is positive
// when compared).
struct IntPolynomial {
    std::vector<long long> coefficients;

    bool zero() const;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    bool symmetric() const;  // palindromic up to overall sign
    static IntPolynomial from(std::vector<long long> coeffs);
};

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

struct FoxMilnorResult {
    bool satisfiable = false;
    IntPolynomial witness;   // f with poly = ± f(t) f(1/t) t^deg(f)
    long long height_bound = 0;  // the search was exhaustive up to this coefficient height
};

// Exhaustive search for a factorization poly = f(t) f(t^-1) up to units, over
// integer f of half degree with coefficient height max|coeff| + slack. A negative
// result is certified only within those bounds.
FoxMilnorResult fox_milnor_factor(const IntPolynomial& poly, long long slack = 1);

// Connected-sum product rule over declared per-piece polynomials.
IntPolynomial alexander_of_splice(const std::vector<IntPolynomial>& annotations);

std::string polynomial_to_string(const IntPolynomial& p);

}  // namespace splicekit
