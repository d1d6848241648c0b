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

#ifndef COMAX_POLY_HPP
#define COMAX_POLY_HPP

#include "comax/ints.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace comax {

/// Dense polynomial over F_p, little-endian coefficients in [0, p).
/// The zero polynomial has an empty coefficient vector; every other
/// value keeps a nonzero leading coefficient.  The prime is carried by
/// the surrounding ring context, not by the value.
struct Poly {
    std::vector<std::int64_t> c;

    Poly() = default;
    explicit Poly(std::vector<std::int64_t> coeffs) : c(std::move(coeffs)) {}

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    std::int64_t leading() const { return c.empty() ? 0 : c.back(); }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const {  // total order used for canonical choices
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

Poly poly_trim(Poly f);
Poly poly_from(std::vector<std::int64_t> coeffs, std::int64_t p);
Poly poly_constant(std::int64_t v, std::int64_t p);
Poly poly_x();
bool poly_is_one(const Poly& f);

Poly poly_add(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_neg(const Poly& a, std::int64_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_scale(const Poly& a, std::int64_t s, std::int64_t p);

/// Division with remainder: a = q*b + r, deg r < deg b.  b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, std::int64_t p, Poly& q, Poly& r);
Poly poly_mod(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_div(const Poly& a, const Poly& b, std::int64_t p);

Poly poly_monic(const Poly& a, std::int64_t p);
Poly poly_gcd(Poly a, Poly b, std::int64_t p);  // monic (or zero)
/// Extended gcd: g = gcd(a,b) monic with a*x + b*y = g.
Poly poly_xgcd(const Poly& a, const Poly& b, std::int64_t p, Poly& x, Poly& y);
Poly poly_pow(const Poly& a, unsigned k, std::int64_t p);
Poly poly_powmod(const Poly& a, const Int& k, const Poly& mod, std::int64_t p);
Poly poly_derivative(const Poly& a, std::int64_t p);

/// One irreducible-power factor of a polynomial.
struct PolyPower {
    Poly prime;  // monic irreducible
    unsigned exponent = 0;
};

/// Complete factorization of a nonzero polynomial into monic irreducible
/// powers (unit discarded).  Squarefree split + distinct-degree +
/// Cantor-Zassenhaus splitting; deterministic because the splitting RNG
/// is seeded from the input.  Degree capped to keep runtime exact-budget.
std::vector<PolyPower> poly_factor(const Poly& f, std::int64_t p, int degree_cap = 64);

/// Squarefree part (product of the distinct monic irreducible factors).
Poly poly_radical(const Poly& f, std::int64_t p);

bool poly_is_irreducible(const Poly& f, std::int64_t p);

std::string poly_to_string(const Poly& f);

}  // namespace comax

#endif  // COMAX_POLY_HPP
