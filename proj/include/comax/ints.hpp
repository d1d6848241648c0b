/*
   Copyright 2026 The comax authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef COMAX_INTS_HPP
#define COMAX_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comax {

/// Exact arbitrary-precision integer used throughout the integer lattice
/// kernels; intermediate entries of Smith/Hermite eliminations can far
/// exceed 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent caller input (ring mismatch, bad descriptor, ...).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

/// An enumeration or search exceeded its configured budget.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

/// A ring variant outside the fragment an operation supports.
struct unsupported_error : error {
    explicit unsupported_error(const std::string& msg) : error(msg) {}
};

/// The exponent search ended without establishing the decomposition
/// condition.  Deliberately distinct from input errors: it means
/// "not established", not "false".
struct condition_error : error {
    explicit condition_error(const std::string& msg) : error(msg) {}
};

/// A postcondition that is verified before returning failed; indicates a bug.
struct internal_check_error : error {
    explicit internal_check_error(const std::string& msg) : error(msg) {}
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

/// Extended gcd: returns g = gcd(a,b) >= 0 and x, y with a*x + b*y = g.
inline Int xgcd_int(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int g = xgcd_int(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int pow_int(Int base, unsigned k) {
    Int r = 1;
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

/// Trial-division primality; adequate for the moduli and prime fields
/// this library accepts.
inline bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// One prime-power factor of an integer.
struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

/// Factor |n| by trial division.  Errors when a cofactor survives the
/// division bound; callers treat that as "factorization unavailable".
inline std::vector<PrimePower> factor_int(Int n, std::int64_t trial_bound = (std::int64_t(1) << 26)) {
    n = abs_int(n);
    if (n <= 1) throw input_error("factor_int: |n| must be at least 2");
    std::vector<PrimePower> out;
    for (Int d = 2; d <= trial_bound && d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
    }
    if (n > 1) {
        if (n > Int(trial_bound) * trial_bound)
            throw budget_error("factor_int: cofactor exceeds the trial-division bound");
        out.push_back({n, 1});  // remaining cofactor is prime: no divisor up to sqrt
    }
    return out;
}

/// Squarefree radical of |n| (product of its distinct prime divisors).
inline Int radical_int(const Int& n) {
    Int r = 1;
    for (const auto& pp : factor_int(n)) r *= pp.prime;
    return r;
}

}  // namespace comax

#endif  // COMAX_INTS_HPP
