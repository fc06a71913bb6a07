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

#ifndef HCODES_FORM_HPP
#define HCODES_FORM_HPP

#include <string>
#include <vector>

#include "hcodes/field.hpp"

namespace hcodes {

/// Exponents of X^a Y^b Z^c.
struct Monomial3 {
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const Monomial3&, const Monomial3&) = default;
};

/// Degree-t monomials in graded-lex order (X > Y > Z): X^t, X^{t-1}Y, X^{t-1}Z, ...
const std::vector<Monomial3>& monomials(int degree);

inline int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// Homogeneous form of degree t on P^2, coefficients indexed by monomials(t).
class PlaneForm {
   public:
    PlaneForm() = default;
    explicit PlaneForm(int degree);
    PlaneForm(int degree, std::vector<Elem> coeffs);

    /// aX + bY + cZ.
    static PlaneForm line(Elem a, Elem b, Elem c);

    int degree() const { return degree_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    Elem coeff(int a, int b, int c) const;
    void set_coeff(int a, int b, int c, Elem v);

    bool is_zero() const;
    Elem evaluate(const Field& f, Elem x, Elem y, Elem z) const;

    /// First nonzero coefficient scaled to 1.
    PlaneForm normalized(const Field& f) const;
    PlaneForm times(const Field& f, const PlaneForm& other) const;

    /// Sparse "coeff*X^aY^bZ^c" terms in graded-lex order joined by " + ".
    std::string to_string(const Field& f) const;

    /// Graded-lex comparison: degree, then coefficient codes position by position.
    friend auto operator<=>(const PlaneForm& x, const PlaneForm& y) {
        if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
        return x.coeffs_ <=> y.coeffs_;
    }
    friend bool operator==(const PlaneForm&, const PlaneForm&) = default;

   private:
    int degree_ = 0;
    std::vector<Elem> coeffs_;
};

int monomial_index(int degree, int a, int b, int c);

}  // namespace hcodes

#endif  // HCODES_FORM_HPP
