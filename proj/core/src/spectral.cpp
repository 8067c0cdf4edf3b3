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

#include "nsk/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <random>

namespace nsk {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// The FFTW planner is not thread-safe; every plan creation/destruction
// goes through this mutex.  Plan execution on per-thread buffers is safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Workspace {
    GridSpec grid;
    std::size_t nreal = 0;
    std::size_t ncplx = 0;
    int ncx = 0;  // points along the (halved) last axis
    double* rbuf = nullptr;
    fftw_complex* cbuf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit Workspace(const GridSpec& g) : grid(g) {
        nreal = g.npoints();
        ncx = g.n / 2 + 1;
        ncplx = nreal / static_cast<std::size_t>(g.n) * static_cast<std::size_t>(ncx);
        rbuf = fftw_alloc_real(nreal);
        cbuf = fftw_alloc_complex(ncplx);
        int dims[3] = {g.n, g.n, g.n};
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd = fftw_plan_dft_r2c(g.dim, dims, rbuf, cbuf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r(g.dim, dims, cbuf, rbuf, FFTW_ESTIMATE);
        if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
    }

    ~Workspace() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        fftw_free(rbuf);
        fftw_free(cbuf);
    }

    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    void forward(const ScalarField& f) {
        std::copy(f.values.begin(), f.values.end(), rbuf);
        fftw_execute(fwd);
    }

    void inverse(ScalarField& out) {
        fftw_execute(bwd);
        const double scale = 1.0 / static_cast<double>(nreal);
        out.values.resize(nreal);
        for (std::size_t i = 0; i < nreal; ++i) out.values[i] = rbuf[i] * scale;
        out.grid = grid;
    }

    // Decompose a complex-buffer index into integer wavenumbers.
    // Axes 0..dim-2 run over the full range, the last axis is halved.
    inline void wavevector(std::size_t idx, int* k) const {
        const int n = grid.n;
        int rem = static_cast<int>(idx);
        int kx_last = rem % ncx;
        rem /= ncx;
        for (int a = grid.dim - 2; a >= 0; --a) {
            int j = rem % n;
            rem /= n;
            k[a] = (j <= n / 2) ? j : j - n;
        }
        k[grid.dim - 1] = kx_last;
    }
};

Workspace& workspace_for(const GridSpec& g) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<Workspace>> cache;
    auto key = std::make_pair(g.dim, g.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Workspace>(g)).first;
    return *it->second;
}

inline bool below_cutoff(const int* k, int dim, int cutoff) {
    for (int a = 0; a < dim; ++a)
        if (std::abs(k[a]) > cutoff) return false;
    return true;
}

enum class OpKind { Derivative, Laplacian, GradLaplacian, Dealias, HeatDecay };

ScalarField apply_op(const ScalarField& f, OpKind kind, int axis, double alpha,
                     bool dealias_mask) {
    Workspace& ws = workspace_for(f.grid);
    ws.forward(f);
    const int dim = f.grid.dim;
    const int nyq = f.grid.n / 2;
    const int cutoff = f.grid.n / 3;
    int k[3] = {0, 0, 0};
    for (std::size_t i = 0; i < ws.ncplx; ++i) {
        ws.wavevector(i, k);
        double re = ws.cbuf[i][0];
        double im = ws.cbuf[i][1];
        if (dealias_mask && !below_cutoff(k, dim, cutoff)) {
            ws.cbuf[i][0] = 0.0;
            ws.cbuf[i][1] = 0.0;
            continue;
        }
        switch (kind) {
            case OpKind::Derivative: {
                // i * 2 pi k_axis; the Nyquist mode has no well-defined
                // odd derivative and is zeroed.
                double ka = (std::abs(k[axis]) == nyq) ? 0.0 : kTwoPi * k[axis];
                ws.cbuf[i][0] = -ka * im;
                ws.cbuf[i][1] = ka * re;
                break;
            }
            case OpKind::Laplacian: {
                double k2 = 0.0;
                for (int a = 0; a < dim; ++a) k2 += static_cast<double>(k[a]) * k[a];
                double m = -kTwoPi * kTwoPi * k2;
                ws.cbuf[i][0] = m * re;
                ws.cbuf[i][1] = m * im;
                break;
            }
            case OpKind::GradLaplacian: {
                double k2 = 0.0;
                for (int a = 0; a < dim; ++a) k2 += static_cast<double>(k[a]) * k[a];
                double ka = (std::abs(k[axis]) == nyq) ? 0.0 : kTwoPi * k[axis];
                double m = -kTwoPi * kTwoPi * k2;  // times i*2 pi k_axis
                ws.cbuf[i][0] = -m * ka * im;
                ws.cbuf[i][1] = m * ka * re;
                break;
            }
            case OpKind::Dealias:
                break;  // mask handled above
            case OpKind::HeatDecay: {
                double k2 = 0.0;
                for (int a = 0; a < dim; ++a) k2 += static_cast<double>(k[a]) * k[a];
                double m = std::exp(-kTwoPi * kTwoPi * k2 * alpha);
                ws.cbuf[i][0] = m * re;
                ws.cbuf[i][1] = m * im;
                break;
            }
        }
    }
    ScalarField out;
    ws.inverse(out);
    return out;
}

void check_axis(const ScalarField& f, int axis, const char* where) {
    if (axis < 0 || axis >= f.grid.dim)
        throw std::invalid_argument(std::string(where) + ": axis out of range");
}

}  // namespace

ScalarField ddx(const ScalarField& f, int axis) {
    check_axis(f, axis, "ddx");
    if (!f.all_finite()) throw std::invalid_argument("ddx: non-finite input");
    return apply_op(f, OpKind::Derivative, axis, 0.0, false);
}

ScalarField ddx_dealiased(const ScalarField& f, int axis) {
    check_axis(f, axis, "ddx_dealiased");
    return apply_op(f, OpKind::Derivative, axis, 0.0, true);
}

VectorField grad(const ScalarField& f) {
    VectorField out(f.grid);
    for (int a = 0; a < f.grid.dim; ++a) out[a] = ddx(f, a);
    return out;
}

ScalarField divergence(const VectorField& F) {
    ScalarField out(F.grid);
    for (int a = 0; a < F.grid.dim; ++a) {
        ScalarField d = ddx(F[a], a);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i];
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    return apply_op(f, OpKind::Laplacian, 0, 0.0, false);
}

VectorField grad_laplacian(const ScalarField& f) {
    VectorField out(f.grid);
    for (int a = 0; a < f.grid.dim; ++a)
        out[a] = apply_op(f, OpKind::GradLaplacian, a, 0.0, false);
    return out;
}

TensorField jacobian(const VectorField& F) {
    TensorField out(F.grid);
    for (int i = 0; i < F.grid.dim; ++i)
        for (int j = 0; j < F.grid.dim; ++j) out(i, j) = ddx(F[j], i);
    return out;
}

TensorField jacobian_dealiased(const VectorField& F) {
    TensorField out(F.grid);
    for (int i = 0; i < F.grid.dim; ++i)
        for (int j = 0; j < F.grid.dim; ++j) out(i, j) = ddx_dealiased(F[j], i);
    return out;
}

VectorField divergence(const TensorField& T) {
    VectorField out(T.grid);
    for (int j = 0; j < T.grid.dim; ++j)
        for (int i = 0; i < T.grid.dim; ++i) {
            ScalarField d = ddx(T(i, j), i);
            for (std::size_t p = 0; p < d.size(); ++p) out[j][p] += d[p];
        }
    return out;
}

VectorField divergence_dealiased(const TensorField& T) {
    VectorField out(T.grid);
    for (int j = 0; j < T.grid.dim; ++j)
        for (int i = 0; i < T.grid.dim; ++i) {
            ScalarField d = ddx_dealiased(T(i, j), i);
            for (std::size_t p = 0; p < d.size(); ++p) out[j][p] += d[p];
        }
    return out;
}

ScalarField dealias(const ScalarField& f) {
    return apply_op(f, OpKind::Dealias, 0, 0.0, true);
}

VectorField dealias(const VectorField& F) {
    VectorField out(F.grid);
    for (int a = 0; a < F.grid.dim; ++a) out[a] = dealias(F[a]);
    return out;
}

ScalarField heat_decay(const ScalarField& f, double alpha) {
    return apply_op(f, OpKind::HeatDecay, 0, alpha, false);
}

ScalarField spectral_restrict(const ScalarField& fine, const GridSpec& coarse) {
    if (coarse.dim != fine.grid.dim)
        throw std::invalid_argument("spectral_restrict: dimension mismatch");
    if (coarse.n >= fine.grid.n)
        throw std::invalid_argument("spectral_restrict: target grid must be coarser");
    Workspace& wf = workspace_for(fine.grid);
    Workspace& wc = workspace_for(coarse);
    wf.forward(fine);
    for (std::size_t i = 0; i < wc.ncplx; ++i) {
        wc.cbuf[i][0] = 0.0;
        wc.cbuf[i][1] = 0.0;
    }
    const int keep = coarse.n / 2 - 1;  // coarse Nyquist left empty
    int k[3] = {0, 0, 0};
    const int nf = fine.grid.n;
    const int nc = coarse.n;
    for (std::size_t i = 0; i < wf.ncplx; ++i) {
        wf.wavevector(i, k);
        bool ok = true;
        for (int a = 0; a < fine.grid.dim; ++a)
            if (std::abs(k[a]) > keep) { ok = false; break; }
        if (!ok) continue;
        // rebuild the halfcomplex index on the coarse grid
        std::size_t ci = 0;
        for (int a = 0; a < fine.grid.dim - 1; ++a) {
            int j = (k[a] >= 0) ? k[a] : nc + k[a];
            ci = ci * static_cast<std::size_t>(nc) + static_cast<std::size_t>(j);
        }
        ci = ci * static_cast<std::size_t>(wc.ncx) + static_cast<std::size_t>(k[fine.grid.dim - 1]);
        wc.cbuf[ci][0] = wf.cbuf[i][0];
        wc.cbuf[ci][1] = wf.cbuf[i][1];
        (void)nf;
    }
    // forward transform of the fine field carries its own 1/N_fine
    ScalarField out;
    wc.inverse(out);
    const double rescale = static_cast<double>(wc.nreal) / static_cast<double>(wf.nreal);
    for (double& v : out.values) v *= rescale;
    return out;
}

VectorField spectral_restrict(const VectorField& fine, const GridSpec& coarse) {
    VectorField out(coarse);
    for (int a = 0; a < fine.grid.dim; ++a) out[a] = spectral_restrict(fine[a], coarse);
    return out;
}

ScalarField spectral_prolong(const ScalarField& coarse, const GridSpec& fine) {
    if (fine.dim != coarse.grid.dim)
        throw std::invalid_argument("spectral_prolong: dimension mismatch");
    if (fine.n <= coarse.grid.n)
        throw std::invalid_argument("spectral_prolong: target grid must be finer");
    Workspace& wc = workspace_for(coarse.grid);
    Workspace& wf = workspace_for(fine);
    wc.forward(coarse);
    for (std::size_t i = 0; i < wf.ncplx; ++i) {
        wf.cbuf[i][0] = 0.0;
        wf.cbuf[i][1] = 0.0;
    }
    const int nc = coarse.grid.n;
    const int nf = fine.n;
    const int nyq_c = nc / 2;
    int k[3] = {0, 0, 0};
    for (std::size_t i = 0; i < wc.ncplx; ++i) {
        wc.wavevector(i, k);
        // the coarse Nyquist mode has no unambiguous fine-grid image
        bool skip = false;
        for (int a = 0; a < coarse.grid.dim; ++a)
            if (std::abs(k[a]) == nyq_c) { skip = true; break; }
        if (skip) continue;
        std::size_t fi = 0;
        for (int a = 0; a < coarse.grid.dim - 1; ++a) {
            int j = (k[a] >= 0) ? k[a] : nf + k[a];
            fi = fi * static_cast<std::size_t>(nf) + static_cast<std::size_t>(j);
        }
        fi = fi * static_cast<std::size_t>(wf.ncx) + static_cast<std::size_t>(k[coarse.grid.dim - 1]);
        wf.cbuf[fi][0] = wc.cbuf[i][0];
        wf.cbuf[fi][1] = wc.cbuf[i][1];
    }
    ScalarField out;
    wf.inverse(out);
    const double rescale = static_cast<double>(wf.nreal) / static_cast<double>(wc.nreal);
    for (double& v : out.values) v *= rescale;
    return out;
}

VectorField spectral_prolong(const VectorField& coarse, const GridSpec& fine) {
    VectorField out(fine);
    for (int a = 0; a < coarse.grid.dim; ++a) out[a] = spectral_prolong(coarse[a], fine);
    return out;
}

std::complex<double> fourier_coefficient(const ScalarField& f, const std::array<int, 3>& k) {
    Workspace& ws = workspace_for(f.grid);
    const int dim = f.grid.dim;
    const int n = f.grid.n;
    std::array<int, 3> kk = k;
    bool conj = false;
    if (kk[static_cast<std::size_t>(dim - 1)] < 0) {
        // stored half-spectrum has k_last >= 0; use conjugate symmetry
        for (int a = 0; a < dim; ++a) kk[static_cast<std::size_t>(a)] = -kk[static_cast<std::size_t>(a)];
        conj = true;
    }
    ws.forward(f);
    std::size_t ci = 0;
    for (int a = 0; a < dim - 1; ++a) {
        int j = (kk[static_cast<std::size_t>(a)] >= 0) ? kk[static_cast<std::size_t>(a)] : n + kk[static_cast<std::size_t>(a)];
        ci = ci * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
    }
    ci = ci * static_cast<std::size_t>(ws.ncx) + static_cast<std::size_t>(kk[static_cast<std::size_t>(dim - 1)]);
    std::complex<double> c(ws.cbuf[ci][0], ws.cbuf[ci][1]);
    c /= static_cast<double>(ws.nreal);
    return conj ? std::conj(c) : c;
}

namespace {
double kahan_sum(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}
}  // namespace

double integrate(const ScalarField& f) {
    double vol = std::pow(f.grid.length, f.grid.dim);
    return kahan_sum(f.values) / static_cast<double>(f.size()) * vol;
}

double l2_norm(const ScalarField& f) {
    double s = 0.0, c = 0.0;
    for (double x : f.values) {
        double y = x * x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return std::sqrt(s / static_cast<double>(f.size()));
}

double l2_norm(const VectorField& F) {
    double s = 0.0;
    for (int a = 0; a < F.grid.dim; ++a) {
        double na = l2_norm(F[a]);
        s += na * na;
    }
    return std::sqrt(s);
}

double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.values) m = std::max(m, std::abs(x));
    return m;
}

double linf_norm(const VectorField& F) {
    double m = 0.0;
    for (int a = 0; a < F.grid.dim; ++a) m = std::max(m, linf_norm(F[a]));
    return m;
}

double lgamma_norm(const ScalarField& f, double gamma) {
    double s = 0.0;
    for (double x : f.values) s += std::pow(std::abs(x), gamma);
    return std::pow(s / static_cast<double>(f.size()), 1.0 / gamma);
}

ScalarField random_band_limited(const GridSpec& g, int kmax, std::uint64_t seed,
                                double amplitude) {
    if (kmax < 1 || kmax > g.n / 3)
        throw std::invalid_argument("random_band_limited: kmax outside (0, n/3]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);

    // enumerate wavevectors with 1 <= max|k_a| <= kmax, one per +/- pair
    std::vector<std::array<int, 3>> modes;
    auto push = [&](int k0, int k1, int k2) {
        if (k0 == 0 && k1 == 0 && k2 == 0) return;
        if (k0 < 0) return;  // representative of the conjugate pair
        if (k0 == 0 && k1 < 0) return;
        if (k0 == 0 && k1 == 0 && k2 < 0) return;
        modes.push_back({k0, k1, k2});
    };
    const int lim1 = (g.dim >= 2) ? kmax : 0;
    const int lim2 = (g.dim >= 3) ? kmax : 0;
    for (int k0 = -kmax; k0 <= kmax; ++k0)
        for (int k1 = -lim1; k1 <= lim1; ++k1)
            for (int k2 = -lim2; k2 <= lim2; ++k2) push(k0, k1, k2);

    ScalarField out(g);
    const int n = g.n;
    std::vector<double> a(modes.size()), b(modes.size());
    for (std::size_t m = 0; m < modes.size(); ++m) {
        a[m] = coef(rng);
        b[m] = coef(rng);
    }
    std::array<int, 3> idx{0, 0, 0};
    for (std::size_t p = 0; p < out.size(); ++p) {
        std::size_t rem = p;
        for (int axis = g.dim - 1; axis >= 0; --axis) {
            idx[static_cast<std::size_t>(axis)] = static_cast<int>(rem % n);
            rem /= n;
        }
        double val = 0.0;
        for (std::size_t m = 0; m < modes.size(); ++m) {
            double phase = 0.0;
            for (int axis = 0; axis < g.dim; ++axis)
                phase += kTwoPi * modes[m][static_cast<std::size_t>(axis)] *
                         idx[static_cast<std::size_t>(axis)] / n;
            val += a[m] * std::cos(phase) + b[m] * std::sin(phase);
        }
        out[p] = val;
    }
    double m = linf_norm(out);
    if (m > 0.0) {
        double s = amplitude / m;
        for (double& v : out.values) v *= s;
    }
    return out;
}

}  // namespace nsk
