// chanfm - channel foundation model toolkit
// Copyright (C) 2026 chanfm contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chanfm/tensor.hpp"

#include <cmath>
#include <sstream>

#include "chanfm/errors.hpp"
#include "chanfm/rng.hpp"

namespace chanfm {

std::size_t shape_numel(const std::vector<std::size_t> &shape) {
    std::size_t n = 1;
    for (std::size_t d : shape)
        n *= d;
    return n;
}

Tensor::Tensor(std::vector<std::size_t> s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    if (shape_numel(shape) != data.size())
        throw ValidationError("tensor data length " + std::to_string(data.size()) +
                              " does not match shape " + shape_str());
}

Tensor Tensor::full(std::vector<std::size_t> s, double v) {
    Tensor t(std::move(s));
    for (auto &x : t.data)
        x = v;
    return t;
}

Tensor Tensor::randn(std::vector<std::size_t> s, std::mt19937_64 &rng, double stddev) {
    Tensor t(std::move(s));
    for (auto &x : t.data)
        x = stddev * gaussian(rng);
    return t;
}

std::size_t Tensor::cols() const { return shape.empty() ? 1 : shape.back(); }

std::size_t Tensor::rows() const {
    const std::size_t c = cols();
    return c == 0 ? 0 : data.size() / c;
}

double &Tensor::at(std::size_t i, std::size_t j) { return data[i * cols() + j]; }

double Tensor::at(std::size_t i, std::size_t j) const { return data[i * cols() + j]; }

bool Tensor::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v))
            return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i)
        os << (i ? " x " : "") << shape[i];
    os << "]";
    return os.str();
}

void matmul_into(const Tensor &a, const Tensor &b, Tensor &out) {
    const std::size_t m = a.shape[0], k = a.shape[1], n = b.shape[1];
    const double *pa = a.data.data();
    const double *pb = b.data.data();
    double *pc = out.data.data();
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double *ci = pc + i * n;
        for (std::size_t j = 0; j < n; ++j)
            ci[j] = 0.0;
        const double *ai = pa + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double *bp = pb + p * n;
            for (std::size_t j = 0; j < n; ++j)
                ci[j] += aip * bp[j];
        }
    }
}

void matmul_accumulate(const Tensor &a, const Tensor &b, Tensor &out) {
    const std::size_t m = a.shape[0], k = a.shape[1], n = b.shape[1];
    const double *pa = a.data.data();
    const double *pb = b.data.data();
    double *pc = out.data.data();
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double *ci = pc + i * n;
        const double *ai = pa + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double *bp = pb + p * n;
            for (std::size_t j = 0; j < n; ++j)
                ci[j] += aip * bp[j];
        }
    }
}

void matmul_nt_accumulate(const Tensor &a, const Tensor &b, Tensor &out) {
    const std::size_t m = a.shape[0], k = a.shape[1], n = b.shape[0];
    const double *pa = a.data.data();
    const double *pb = b.data.data();
    double *pc = out.data.data();
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double *ai = pa + i * k;
        double *ci = pc + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double *bj = pb + j * k;
            double acc = 0.0;
            for (std::size_t p = 0; p < k; ++p)
                acc += ai[p] * bj[p];
            ci[j] += acc;
        }
    }
}

void matmul_tn_accumulate(const Tensor &a, const Tensor &b, Tensor &out) {
    const std::size_t k = a.shape[0], m = a.shape[1], n = b.shape[1];
    const double *pa = a.data.data();
    const double *pb = b.data.data();
    double *pc = out.data.data();
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double *ci = pc + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = pa[p * m + i];
            const double *bp = pb + p * n;
            for (std::size_t j = 0; j < n; ++j)
                ci[j] += aip * bp[j];
        }
    }
}

} // namespace chanfm
