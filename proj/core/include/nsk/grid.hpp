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

#ifndef NSK_GRID_HPP
#define NSK_GRID_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace nsk {

/// Uniform periodic tensor-product grid on the flat torus [0,1]^dim.
/// The same number of points is used along every axis; fields live at
/// the nodes x_i = i/n.
struct GridSpec {
    int dim = 1;
    int n = 0;
    double length = 1.0;

    GridSpec() = default;
    GridSpec(int dim_, int n_);

    std::size_t npoints() const;
    double dx() const { return length / n; }

    bool operator==(const GridSpec& o) const {
        return dim == o.dim && n == o.n && length == o.length;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

/// Real scalar field sampled on a GridSpec, row-major over axes
/// (axis 0 slowest). values.size() == n^dim always.
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g, double fill = 0.0)
        : grid(g), values(g.npoints(), fill) {}

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }

    bool all_finite() const;
};

/// dim scalar components on one shared grid.
struct VectorField {
    GridSpec grid;
    std::vector<ScalarField> comps;

    VectorField() = default;
    explicit VectorField(const GridSpec& g)
        : grid(g), comps(static_cast<std::size_t>(g.dim), ScalarField(g)) {}

    ScalarField& operator[](int a) { return comps[static_cast<std::size_t>(a)]; }
    const ScalarField& operator[](int a) const { return comps[static_cast<std::size_t>(a)]; }
};

/// dim x dim scalar components on one shared grid.  Component (i,j)
/// carries the derivative index first: jacobian(F)(i,j) = d_i F_j.
struct TensorField {
    GridSpec grid;
    std::vector<ScalarField> comps;  // row-major, dim*dim entries

    TensorField() = default;
    explicit TensorField(const GridSpec& g)
        : grid(g), comps(static_cast<std::size_t>(g.dim) * g.dim, ScalarField(g)) {}

    ScalarField& operator()(int i, int j) {
        return comps[static_cast<std::size_t>(i) * grid.dim + j];
    }
    const ScalarField& operator()(int i, int j) const {
        return comps[static_cast<std::size_t>(i) * grid.dim + j];
    }
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

/// Evaluate f(x) at every node; x has dim entries in [0,1).
ScalarField sample(const GridSpec& g,
                   const std::function<double(const std::array<double, 3>&)>& f);

// Pointwise arithmetic.  All operands must share a grid.
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
ScalarField operator+(const ScalarField& a, double s);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);
VectorField operator*(const ScalarField& s, const VectorField& a);

void axpy(ScalarField& y, double a, const ScalarField& x);  // y += a*x
void axpy(VectorField& y, double a, const VectorField& x);

}  // namespace nsk

#endif
