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

#include "frobqec/state_oracle.h"

#include <cmath>

#include "frobqec/errors.h"

namespace frobqec {

namespace {

std::vector<std::complex<double>> character_values(const Ring &ring) {
    std::vector<std::complex<double>> out(ring.size());
    for (std::size_t x = 0; x < ring.size(); x++) {
        out[x] = ring.epsilon(Element(x)).to_complex();
    }
    return out;
}

// For every x: the code of x - a and the phase epsilon(beta(b, x - a)).
struct WeylAction {
    std::vector<Code> source;
    std::vector<std::complex<double>> phase;
};

// Caches the points of H so repeated actions avoid decoding.
class ActionBuilder {
   public:
    explicit ActionBuilder(const PhaseSpace &space) : space_(space), chars_(character_values(space.r())) {
        const FreeModule &h = space.module();
        if (h.size() > 4096) {
            throw ResourceError("state oracle needs |H| <= 4096");
        }
        points_.reserve(h.size());
        for (Code x = 0; x < h.size(); x++) {
            points_.push_back(h.decode(x));
        }
    }

    void build(const WeylElement &e, WeylAction &act) const {
        const FreeModule &h = space_.module();
        const std::complex<double> scalar = e.turn.to_complex();
        act.source.resize(h.size());
        act.phase.resize(h.size());
        Vector shifted(space_.rank());
        for (Code x = 0; x < h.size(); x++) {
            const Vector &p = points_[x];
            for (int i = 0; i < space_.rank(); i++) {
                shifted[i] = space_.r().sub(p[i], e.a[i]);
            }
            act.source[x] = h.encode(shifted);
            act.phase[x] = scalar * chars_[space_.form_eval(e.b, shifted)];
        }
    }

   private:
    const PhaseSpace &space_;
    std::vector<std::complex<double>> chars_;
    std::vector<Vector> points_;
};

WeylAction weyl_action(const PhaseSpace &space, const WeylElement &e) {
    WeylAction act;
    ActionBuilder(space).build(e, act);
    return act;
}

}  // namespace

StateVector apply_weyl(const PhaseSpace &space, const WeylElement &e, const StateVector &f) {
    if (f.size() != space.size()) {
        throw InvalidInputError("state vector length does not match |H|");
    }
    WeylAction act = weyl_action(space, e);
    StateVector out(f.size());
    for (std::size_t x = 0; x < f.size(); x++) {
        out[x] = act.phase[x] * f[act.source[x]];
    }
    return out;
}

DenseMatrix weyl_matrix(const PhaseSpace &space, const WeylElement &e) {
    WeylAction act = weyl_action(space, e);
    const std::size_t dim = space.size();
    DenseMatrix m{dim, std::vector<std::complex<double>>(dim * dim)};
    // Column j is the image of basis vector delta_j: nonzero at x with x - a = j.
    for (std::size_t x = 0; x < dim; x++) {
        m.at(x, act.source[x]) = act.phase[x];
    }
    return m;
}

DenseMatrix multiply(const DenseMatrix &x, const DenseMatrix &y) {
    const std::size_t n = x.dim;
    DenseMatrix out{n, std::vector<std::complex<double>>(n * n)};
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t t = 0; t < n; t++) {
            const auto v = x.at(i, t);
            if (v == std::complex<double>{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                out.at(i, j) += v * y.at(t, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix &x, const DenseMatrix &y) {
    double worst = 0;
    for (std::size_t i = 0; i < x.data.size(); i++) {
        worst = std::max(worst, std::abs(x.data[i] - y.data[i]));
    }
    return worst;
}

bool numeric_commutation_check(const PhaseSpace &space,
                               const WeylElement &e1,
                               const WeylElement &e2,
                               double tol) {
    if (space.size() > 256) {
        throw ResourceError("numeric commutation check needs |H| <= 256");
    }
    const std::complex<double> c = commutator(space, e1, e2).to_complex();
    const std::size_t dim = space.size();
    ActionBuilder builder(space);
    WeylAction act1, act2;
    builder.build(e1, act1);
    builder.build(e2, act2);
    auto apply = [dim](const WeylAction &act, const StateVector &f) {
        StateVector out(dim);
        for (std::size_t x = 0; x < dim; x++) {
            out[x] = act.phase[x] * f[act.source[x]];
        }
        return out;
    };
    for (std::size_t j = 0; j < dim; j++) {
        StateVector basis(dim);
        basis[j] = 1.0;
        StateVector left = apply(act1, apply(act2, basis));
        StateVector right = apply(act2, apply(act1, basis));
        for (std::size_t x = 0; x < dim; x++) {
            if (std::abs(left[x] - c * right[x]) > tol) {
                return false;
            }
        }
    }
    return true;
}

DenseMatrix averaging_projector(const PhaseSpace &space, const StabiliserGroup &s) {
    if (space.size() > 256) {
        throw ResourceError("projector oracle needs |H| <= 256");
    }
    if (s.order() > 4096) {
        throw ResourceError("projector oracle needs |S| <= 4096");
    }
    const std::size_t dim = space.size();
    DenseMatrix p{dim, std::vector<std::complex<double>>(dim * dim)};
    const double weight = 1.0 / static_cast<double>(s.order());
    ActionBuilder builder(space);
    WeylAction act;
    for (const auto &e : s.elements) {
        builder.build(e, act);
        for (std::size_t x = 0; x < dim; x++) {
            p.at(x, act.source[x]) += weight * act.phase[x];
        }
    }
    return p;
}

std::uint64_t numeric_rank(DenseMatrix m) {
    const std::size_t n = m.dim;
    std::vector<std::size_t> rows(n);
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; i++) {
        rows[i] = cols[i] = i;
    }
    std::uint64_t rank = 0;
    for (std::size_t step = 0; step < n; step++) {
        double best = -1;
        std::size_t bi = step;
        std::size_t bj = step;
        for (std::size_t i = step; i < n; i++) {
            for (std::size_t j = step; j < n; j++) {
                double v = std::norm(m.at(rows[i], cols[j]));
                if (v > best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        best = std::sqrt(best);
        if (best < kRankDeadBand) {
            break;
        }
        if (best < kRankThreshold) {
            throw IllConditionedRank("pivot " + std::to_string(best) + " inside the rank dead band");
        }
        std::swap(rows[step], rows[bi]);
        std::swap(cols[step], cols[bj]);
        const std::complex<double> pivot = m.at(rows[step], cols[step]);
        for (std::size_t i = step + 1; i < n; i++) {
            const std::complex<double> factor = m.at(rows[i], cols[step]) / pivot;
            if (factor == std::complex<double>{}) {
                continue;
            }
            for (std::size_t j = step; j < n; j++) {
                m.at(rows[i], cols[j]) -= factor * m.at(rows[step], cols[j]);
            }
        }
        rank++;
    }
    return rank;
}

std::uint64_t projector_rank(const PhaseSpace &space, const StabiliserGroup &s) {
    return numeric_rank(averaging_projector(space, s));
}

}  // namespace frobqec
