// Copyright 2026 The frobqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FROBQEC_STATE_ORACLE_H
#define FROBQEC_STATE_ORACLE_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "frobqec/phase_space.h"
#include "frobqec/weyl.h"

namespace frobqec {

// Dense floating-point model of Fun(H, C). Nothing here feeds back into the
// exact code paths; it only confirms them.

/// Amplitudes indexed by the code order of H.
using StateVector = std::vector<std::complex<double>>;

/// |H| x |H| complex matrix, row-major.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    std::complex<double> &at(std::size_t i, std::size_t j) { return data[i * dim + j]; }
    const std::complex<double> &at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

/// Raised when a pivot lands in the dead band [1e-10, 1e-8).
class IllConditionedRank : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kRankDeadBand = 1e-10;

/// result(x) = exp(2 pi i turn) epsilon(beta(b, x - a)) f(x - a).
StateVector apply_weyl(const PhaseSpace &space, const WeylElement &e, const StateVector &f);

/// The matrix of e acting on Fun(H, C).
DenseMatrix weyl_matrix(const PhaseSpace &space, const WeylElement &e);

/// Checks e1 e2 = exp(2 pi i c) e2 e1 on every basis vector, c the exact
/// commutator, to within tol.
bool numeric_commutation_check(const PhaseSpace &space,
                               const WeylElement &e1,
                               const WeylElement &e2,
                               double tol = 1e-9);

/// P = (1/|S|) sum_s s.
DenseMatrix averaging_projector(const PhaseSpace &space, const StabiliserGroup &s);

/// Rank by complete-pivot elimination: pivots >= 1e-8 count, pivots below 1e-10
/// end the elimination, anything in between throws IllConditionedRank.
std::uint64_t numeric_rank(DenseMatrix m);

/// numeric_rank(averaging_projector(space, s)). Needs |H| <= 256, |S| <= 4096.
std::uint64_t projector_rank(const PhaseSpace &space, const StabiliserGroup &s);

/// max |x_ij - y_ij|.
double max_abs_diff(const DenseMatrix &x, const DenseMatrix &y);
DenseMatrix multiply(const DenseMatrix &x, const DenseMatrix &y);

}  // namespace frobqec

#endif
