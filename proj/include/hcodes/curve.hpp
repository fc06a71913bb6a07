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

#ifndef HCODES_CURVE_HPP
#define HCODES_CURVE_HPP

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcodes/field.hpp"
#include "hcodes/form.hpp"

namespace hcodes {

/// Rational point of the Hermitian curve: the point at infinity (0:1:0) or
/// an affine point (x:y:1). Ordered canonically: infinity first, then by the
/// exponent codes of (x, y).
struct CurvePoint {
    bool at_infinity = false;
    Elem x;
    Elem y;

    static CurvePoint infinity() { return {true, {}, {}}; }
    static CurvePoint affine(Elem x, Elem y) { return {false, x, y}; }
    static CurvePoint origin() { return {false, Field::zero(), Field::zero()}; }

    /// Homogeneous coordinates (X, Y, Z).
    std::array<Elem, 3> projective() const {
        if (at_infinity) return {Field::zero(), Field::one(), Field::zero()};
        return {x, y, Field::one()};
    }

    friend auto operator<=>(const CurvePoint& p, const CurvePoint& r) {
        if (p.at_infinity != r.at_infinity) return p.at_infinity ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
        if (p.at_infinity) return std::strong_ordering::equal;
        if (auto c = p.x <=> r.x; c != 0) return c;
        return p.y <=> r.y;
    }
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

std::string to_string(const Field& f, const CurvePoint& p);
/// Parses "inf", "(0, 0)", "(g^7, g^7)".
CurvePoint parse_point(const Field& f, const std::string& s);

/// Finite formal sum of curve points; zero multiplicities are never stored.
class Divisor {
   public:
    Divisor() = default;

    void add(const CurvePoint& p, int mult);
    int multiplicity(const CurvePoint& p) const;
    int degree() const;
    bool empty() const { return terms_.empty(); }
    bool effective() const;

    const std::map<CurvePoint, int>& terms() const { return terms_; }

    Divisor operator+(const Divisor& o) const;
    friend bool operator==(const Divisor&, const Divisor&) = default;

    /// "mult*point" terms in canonical point order joined by " + "; "0" if empty.
    std::string to_string(const Field& f) const;

   private:
    std::map<CurvePoint, int> terms_;
};

Divisor parse_divisor(const Field& f, const std::string& s);

/// Truncated power-series parametrization of the curve near a rational point.
/// `dependent` holds the coefficients of the non-parameter chart coordinate:
/// y(t) at an affine point with x = x0 + t, z(t) at infinity with chart Y = 1
/// and X = t.
struct LocalExpansion {
    CurvePoint point;
    int order = 0;  // exact modulo t^order
    std::vector<Elem> dependent;
};

/// Rational points of y^q + y = x^{q+1}: P_inf first, then affine points in order.
std::vector<CurvePoint> enumerate_points(const Field& f);

class HermitianCurve {
   public:
    explicit HermitianCurve(FieldPtr field);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int q() const { return field_->q(); }
    int genus() const { return q() * (q() - 1) / 2; }
    /// Degree of a canonical divisor, 2g - 2.
    int canonical_degree() const { return 2 * genus() - 2; }

    /// All q^3 + 1 rational points in canonical order.
    const std::vector<CurvePoint>& points() const { return points_; }
    bool contains(const CurvePoint& p) const;
    std::size_t index_of(const CurvePoint& p) const;

    PlaneForm tangent_line(const CurvePoint& p) const;
    PlaneForm line_through(const CurvePoint& p, const CurvePoint& r) const;

    LocalExpansion local_expansion(const CurvePoint& p, int order) const;

    /// Power series of the form restricted to the curve at p, modulo t^order.
    std::vector<Elem> restrict_form(const PlaneForm& form, const CurvePoint& p, int order) const;
    /// Restrictions of every monomial of the given degree, in graded-lex order.
    std::vector<std::vector<Elem>> restrict_monomials(int degree, const CurvePoint& p, int order) const;

    /// Intersection multiplicity I_p(form, X).
    int valuation(const PlaneForm& form, const CurvePoint& p) const;

    /// The Hermitian form Y^q Z + Y Z^q - X^{q+1}.
    PlaneForm equation() const;
    /// True when the form is a multiple of the curve equation.
    bool vanishes_on_curve(const PlaneForm& form) const;

   private:
    /// Coordinate series (X(t), Y(t), Z(t)) modulo t^order.
    std::array<std::vector<Elem>, 3> coordinate_series(const CurvePoint& p, int order) const;

    FieldPtr field_;
    std::vector<CurvePoint> points_;
};

/// Exponents (i, j) of x^i y^j spanning L(m P_inf + n P_0), 0 <= i <= q,
/// ordered by increasing pole order i*q + j*(q+1) at infinity.
std::vector<std::pair<int, int>> monomial_basis(long m, long n, int q);

/// Whether u(P_inf - P_0) is principal, i.e. (q+1) | u.
bool two_point_principal(long u, int q);

}  // namespace hcodes

#endif  // HCODES_CURVE_HPP
