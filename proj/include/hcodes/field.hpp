/*
   Copyright 2026 The hcodes Authors

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

#ifndef HCODES_FIELD_HPP
#define HCODES_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcodes {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Element of F_{q^2} in exponent coding: 0 is the zero element and k+1 is g^k
/// for the registry generator g. Comparing codes gives the canonical element
/// order (0 first, then increasing exponent).
struct Elem {
    std::uint8_t code = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint8_t c) : code(c) {}

    constexpr bool is_zero() const { return code == 0; }
    constexpr bool is_one() const { return code == 1; }

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Defining data of F_{q^2} = F_p[t]/(modulus), q = p^e.
struct FieldSpec {
    int p = 0;
    int e = 0;
    std::vector<int> modulus;  // ascending, monic, degree 2e
    std::vector<int> generator;  // polynomial-basis coefficients, ascending

    int q() const;
    int degree() const { return 2 * e; }
};

/// Registry entry for q; throws Error("unsupported field ...") outside {2,3,4,5,7,8,9}.
FieldSpec field_spec(int q);

/// Exhaustive trial-division irreducibility test over F_p.
bool is_irreducible(std::span<const int> poly, int p);

class Field {
   public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int q() const { return q_; }
    int size() const { return size_; }  // q^2
    int mult_order() const { return size_ - 1; }

    static constexpr Elem zero() { return Elem{0}; }
    static constexpr Elem one() { return Elem{1}; }
    Elem gen_pow(long k) const;

    Elem add(Elem a, Elem b) const { return Elem{add_[idx(a, b)]}; }
    Elem sub(Elem a, Elem b) const { return Elem{add_[idx(a, Elem{neg_[b.code]})]}; }
    Elem neg(Elem a) const { return Elem{neg_[a.code]}; }
    Elem mul(Elem a, Elem b) const { return Elem{mul_[idx(a, b)]}; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long k) const;
    /// a^q; an involution on F_{q^2} fixing exactly F_q.
    Elem frobenius(Elem a) const { return Elem{frob_[a.code]}; }

    /// Exponent k with a = g^k, or -1 for zero.
    int exponent(Elem a) const { return static_cast<int>(a.code) - 1; }
    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const int> c) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(long v) const;

    std::vector<Elem> elements() const;

    /// "0" or "g^k".
    std::string to_string(Elem a) const;
    /// Inverse of to_string; also accepts "1" and "g".
    Elem parse(const std::string& s) const;

    // Raw Q x Q lookup tables for hot loops, indexed [a * size + b].
    const std::uint8_t* add_table() const { return add_.data(); }
    const std::uint8_t* mul_table() const { return mul_.data(); }
    const std::uint8_t* neg_table() const { return neg_.data(); }
    const std::uint8_t* inv_table() const { return inv_.data(); }

   private:
    std::size_t idx(Elem a, Elem b) const {
        return static_cast<std::size_t>(a.code) * size_ + b.code;
    }

    FieldSpec spec_;
    int q_ = 0;
    int size_ = 0;
    std::vector<int> exp_poly_;  // k -> packed polynomial of g^k
    std::vector<int> poly_code_;  // packed polynomial -> code
    std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shared, cached field for q.
FieldPtr make_field(int q);

}  // namespace hcodes

#endif  // HCODES_FIELD_HPP
