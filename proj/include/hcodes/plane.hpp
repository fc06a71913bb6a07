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

#ifndef HCODES_PLANE_HPP
#define HCODES_PLANE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hcodes/curve.hpp"
#include "hcodes/form.hpp"
#include "hcodes/linalg.hpp"

namespace hcodes {

/// Zero-dimensional subscheme of P^2 cut on the curve: each point P of
/// multiplicity e stands for the curvilinear scheme eP along X.
using SchemeOnCurve = Divisor;

/// Rows indexed by degree-t monomials, one column per condition: for a point
/// of multiplicity e, the coefficients of t^0..t^{e-1} of the monomial
/// restricted to X there. Forms through Z form the left kernel.
Matrix condition_matrix(const HermitianCurve& curve, const SchemeOnCurve& z, int t);

struct Cohomology {
    int h0 = 0;
    int h1 = 0;
};

/// h^0 and h^1 of I_Z(t) on P^2 from one rank computation.
Cohomology h0_h1(const HermitianCurve& curve, const SchemeOnCurve& z, int t);

/// Basis of the degree-t forms containing Z.
std::vector<PlaneForm> forms_through(const HermitianCurve& curve, const SchemeOnCurve& z, int t);

/// All forms of span(basis) up to scalar, normalized, in ascending graded-lex order.
std::vector<PlaneForm> projective_forms(const Field& f, const std::vector<PlaneForm>& basis);

/// deg(T cap Z) = sum over P in Z of min(mult_Z(P), I_P(T, X)).
int intersection_degree(const HermitianCurve& curve, const PlaneForm& form, const SchemeOnCurve& z);

/// The subscheme T cap Z.
SchemeOnCurve intersection_scheme(const HermitianCurve& curve, const PlaneForm& form, const SchemeOnCurve& z);

/// Contains every point of the list (evaluation test).
bool passes_through(const Field& f, const PlaneForm& form, const std::vector<CurvePoint>& pts);

/// Graded-lex least line over F_{q^2} dividing the form, if any (exhaustive over lines).
std::optional<PlaneForm> linear_factor(const Field& f, const PlaneForm& form);

/// All q^4 + q^2 + 1 normalized lines, ascending.
const std::vector<PlaneForm>& all_lines(const Field& f);

enum class WitnessKind { Line, Conic, CubicExcess, CubicCandidate };

std::string to_string(WitnessKind k);

struct Witness {
    WitnessKind kind = WitnessKind::Line;
    PlaneForm form;
    SchemeOnCurve subscheme;  // W subset of Z lying on the form
    int intersection = 0;  // deg(form cap Z)
};

/// Searches, in order, for a line meeting Z in degree >= d'+2, a conic in
/// >= 2d'+2, a cubic in >= 3d'+1, and finally a cubic containing a degree-3d'
/// subscheme (necessary condition for the complete-intersection case only).
/// Candidate forms come from kernels of condition matrices of subschemes of Z
/// and products of lower-degree candidates; the graded-lex least qualifying
/// form of the first successful kind is returned.
std::optional<Witness> find_witness(const HermitianCurve& curve, const SchemeOnCurve& z, int dprime);

/// Upper end of the degree range in which the witness classification is
/// complete: max{2d'+2, 3d', 4d'-5}.
int witness_degree_bound(int dprime);

}  // namespace hcodes

#endif  // HCODES_PLANE_HPP
