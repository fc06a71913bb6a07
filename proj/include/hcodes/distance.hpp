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

#ifndef HCODES_DISTANCE_HPP
#define HCODES_DISTANCE_HPP

#include <vector>

#include "hcodes/code.hpp"
#include "hcodes/curve.hpp"
#include "hcodes/linalg.hpp"
#include "hcodes/plane.hpp"

namespace hcodes {

/// Minimal dependent column set of a generator matrix, i.e. the support of a
/// minimal-support dual codeword.
struct Circuit {
    std::vector<int> support;  // sorted indices into B
    std::vector<Elem> codeword;  // entries on the support, first entry 1
};

/// All w-subsets of columns that are linearly dependent, assuming no smaller
/// column subset is. Sorted lexicographically.
///
/// Depth-first over the first w-2 indices with the remaining columns kept
/// reduced modulo the span of the chosen prefix; the last two indices are
/// matched by grouping projectively equal residues. Work is split across
/// `jobs` threads by the first index and merged deterministically.
std::vector<std::vector<int>> dependent_column_sets(const Field& f, const Matrix& m, int w, int jobs = 1);

/// Whether some w-subset is dependent (same precondition).
bool has_dependent_column_set(const Field& f, const Matrix& m, int w, int jobs = 1);

/// Smallest w <= w_max with a dependent w-subset of columns; throws
/// Error("exceeds search bound") if none.
int min_dependent_size(const Field& f, const Matrix& m, int w_max, int jobs = 1);

/// Normalized kernel vector of the selected columns; throws unless the
/// selection is a circuit.
std::vector<Elem> circuit_vector(const Field& f, const Matrix& m, const std::vector<int>& support);

/// Minimum distance of the dual code.
int dual_min_distance(const Field& f, const TwoPointCode& code, int w_max, int jobs = 1);

/// Every circuit of size delta with its codeword, sorted by support.
std::vector<Circuit> enumerate_min_supports(const Field& f, const TwoPointCode& code, int delta, int jobs = 1);

/// The base scheme E = a P_inf + b P_0.
SchemeOnCurve base_scheme(const CodeParams& params);

/// Degree-d monomial evaluations at the points of B, reduced modulo the
/// span of the conditions imposed by E. A set S of columns is dependent
/// exactly when h^1(I_{E cup S}(d)) > h^1(I_E(d)).
Matrix h1_residual_matrix(const HermitianCurve& curve, const CodeParams& params);

/// Smallest |S| with an h^1 jump, by the same column search on the residual matrix.
int h1_oracle_distance(const HermitianCurve& curve, const TwoPointCode& code, int s_max, int jobs = 1);

/// The same quantity by enumerating subsets in increasing size and testing
/// rank(condition_matrix(E cup S, d)) directly. Exponential; small cases only.
int h1_oracle_distance_direct(const HermitianCurve& curve, const TwoPointCode& code, int s_max);

}  // namespace hcodes

#endif  // HCODES_DISTANCE_HPP
