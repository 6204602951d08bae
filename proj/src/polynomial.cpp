#include "splicekit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "splicekit/error.hpp"

namespace splicekit {

bool IntPolynomial::zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](long long c) { return c == 0; });
}

bool IntPolynomial::symmetric() const {
    std::vector<long long> r(coefficients.rbegin(), coefficients.rend());
    std::vector<long long> neg;
    for (long long c : coefficients) neg.push_back(-c);
    return r == coefficients || r == neg;
}

IntPolynomial IntPolynomial::from(std::vector<long long> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    while (coeffs.size() > 1 && coeffs.front() == 0) coeffs.erase(coeffs.begin());
    if (coeffs.empty()) coeffs.push_back(0);
    return IntPolynomial{std::move(coeffs)};
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<long long> out(a.coefficients.size() + b.coefficients.size() - 1, 0);
    for (size_t i = 0; i < a.coefficients.size(); ++i)
        for (size_t j = 0; j < b.coefficients.size(); ++j)
            out[i + j] += a.coefficients[i] * b.coefficients[j];
    return IntPolynomial::from(std::move(out));
}

namespace {

// t^d f(t) f(1/t): the autocorrelation of f's coefficient vector.
std::vector<long long> symmetric_square(const std::vector<long long>& f) {
    size_t n = f.size();
    std::vector<long long> out(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i + (n - 1) - j] += f[i] * f[j];
    return out;
}

}  // namespace

FoxMilnorResult fox_milnor_factor(const IntPolynomial& poly, long long slack) {
    IntPolynomial p = IntPolynomial::from(poly.coefficients);
    if (p.zero()) fail(ErrorCode::InvalidInput, "polynomial must be nonzero");
    if (!p.symmetric())
        fail(ErrorCode::NotSymmetric, "a Fox-Milnor candidate must be symmetric up to units");

    FoxMilnorResult result;
    long long height = 0;
    for (long long c : p.coefficients) height = std::max(height, std::llabs(c));
    result.height_bound = height + slack;

    int deg = p.degree();
    if (deg % 2 != 0) return result;  // f(t) f(1/t) has even degree
    size_t d = static_cast<size_t>(deg / 2);

    // The middle coefficient of t^d f(t) f(1/t) is sum f_i^2, which pins the
    // square budget of the search; endpoints pin the product f_0 * f_d.
    long long center = p.coefficients[d];
    for (int sign : {+1, -1}) {
        long long target_center = sign * center;
        if (target_center < 0) continue;
        std::vector<long long> target;
        for (long long c : p.coefficients) target.push_back(sign * c);

        std::vector<long long> f(d + 1, 0);
        std::function<bool(size_t, long long)> rec = [&](size_t idx, long long budget) -> bool {
            if (budget < 0) return false;
            if (idx == f.size()) {
                if (budget != 0) return false;
                if (f.front() == 0 && d > 0) return false;
                if (f.back() == 0 && d > 0) return false;
                return symmetric_square(f) == target;
            }
            long long cap = std::min<long long>(result.height_bound,
                                                static_cast<long long>(std::sqrt((double)budget)) + 1);
            for (long long c = -cap; c <= cap; ++c) {
                f[idx] = c;
                if (rec(idx + 1, budget - c * c)) return true;
            }
            f[idx] = 0;
            return false;
        };
        if (rec(0, target_center)) {
            result.satisfiable = true;
            result.witness = IntPolynomial::from(f);
            return result;
        }
    }
    return result;
}

IntPolynomial alexander_of_splice(const std::vector<IntPolynomial>& annotations) {
    if (annotations.empty())
        fail(ErrorCode::MissingAnnotation, "at least one polynomial annotation is required");
    IntPolynomial out = IntPolynomial::from({1});
    for (const auto& p : annotations) out = multiply(out, p);
    return out;
}

std::string polynomial_to_string(const IntPolynomial& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.coefficients.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.coefficients[i]);
    }
    return out + "]";
}

}  // namespace splicekit
