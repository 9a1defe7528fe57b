#pragma once

#include <stdexcept>
#include <string>

namespace ddc {

/// Thrown when an operation is called with arguments outside its domain
/// (invalid coordinates, non-mutable move, malformed input, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal consistency check fails. Never expected; indicates
/// a convention bug in this library rather than bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// The triple (r,n,m) defining Lambda(r,n,m), with the derived boundary
/// counts p = m+r and q = n-r of the marked cylinder C(p,q).
struct CategoryParams {
    int r = 1;
    int n = 2;
    int m = 0;

    CategoryParams() = default;
    CategoryParams(int r_, int n_, int m_) : r(r_), n(n_), m(m_) {
        if (r < 1) throw domain_error("params: r must be >= 1");
        if (m < 0) throw domain_error("params: m must be >= 0");
        if (n <= r) throw domain_error("params: need n > r (finite global dimension)");
    }

    int p() const { return m + r; }
    int q() const { return n - r; }

    bool operator==(const CategoryParams& o) const {
        return r == o.r && n == o.n && m == o.m;
    }
};

/// Integer floor division (round toward -infinity).
inline long long floor_div(long long a, long long b) {
    long long d = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? d - 1 : d;
}

/// a mod b normalized into [0, b).
inline long long floor_mod(long long a, long long b) {
    return a - floor_div(a, b) * b;
}

} // namespace ddc
