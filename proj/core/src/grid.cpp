/**********************************************************************
*  Copyright 2026 the nsk authors
*
*  Licensed under the Apache License, Version 2.0 (the "License");
*  you may not use this file except in compliance with the License.
*  You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
*  Unless required by applicable law or agreed to in writing, software
*  distributed under the License is distributed on an "AS IS" BASIS,
*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
*  implied. See the License for the specific language governing
*  permissions and limitations under the License.
**********************************************************************/

#include "nsk/grid.hpp"

#include <cmath>
#include <string>

namespace nsk {

GridSpec::GridSpec(int dim_, int n_) : dim(dim_), n(n_) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("GridSpec: n must be even and >= 8");
}

std::size_t GridSpec::npoints() const {
    std::size_t p = 1;
    for (int a = 0; a < dim; ++a) p *= static_cast<std::size_t>(n);
    return p;
}

bool ScalarField::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

ScalarField sample(const GridSpec& g,
                   const std::function<double(const std::array<double, 3>&)>& f) {
    ScalarField out(g);
    const int n = g.n;
    const double h = g.length / n;
    std::array<double, 3> x{0.0, 0.0, 0.0};
    std::array<int, 3> idx{0, 0, 0};
    for (std::size_t p = 0; p < out.size(); ++p) {
        std::size_t rem = p;
        for (int a = g.dim - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(rem % n);
            rem /= n;
        }
        for (int a = 0; a < g.dim; ++a) x[static_cast<std::size_t>(a)] = h * idx[static_cast<std::size_t>(a)];
        out[p] = f(x);
    }
    return out;
}

#define NSK_BINOP(op)                                                     \
    ScalarField operator op(const ScalarField& a, const ScalarField& b) { \
        require_same_grid(a.grid, b.grid, "ScalarField arithmetic");      \
        ScalarField out(a.grid);                                          \
        for (std::size_t i = 0; i < out.size(); ++i)                      \
            out[i] = a[i] op b[i];                                        \
        return out;                                                       \
    }

NSK_BINOP(+)
NSK_BINOP(-)
NSK_BINOP(*)
NSK_BINOP(/)
#undef NSK_BINOP

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
    return out;
}

ScalarField operator+(const ScalarField& a, double s) {
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + s;
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    require_same_grid(a.grid, b.grid, "VectorField arithmetic");
    VectorField out(a.grid);
    for (int c = 0; c < a.grid.dim; ++c) out[c] = a[c] + b[c];
    return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    require_same_grid(a.grid, b.grid, "VectorField arithmetic");
    VectorField out(a.grid);
    for (int c = 0; c < a.grid.dim; ++c) out[c] = a[c] - b[c];
    return out;
}

VectorField operator*(double s, const VectorField& a) {
    VectorField out(a.grid);
    for (int c = 0; c < a.grid.dim; ++c) out[c] = s * a[c];
    return out;
}

VectorField operator*(const ScalarField& s, const VectorField& a) {
    require_same_grid(s.grid, a.grid, "VectorField scaling");
    VectorField out(a.grid);
    for (int c = 0; c < a.grid.dim; ++c) out[c] = s * a[c];
    return out;
}

void axpy(ScalarField& y, double a, const ScalarField& x) {
    require_same_grid(y.grid, x.grid, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void axpy(VectorField& y, double a, const VectorField& x) {
    require_same_grid(y.grid, x.grid, "axpy");
    for (int c = 0; c < y.grid.dim; ++c) axpy(y[c], a, x[c]);
}

}  // namespace nsk
