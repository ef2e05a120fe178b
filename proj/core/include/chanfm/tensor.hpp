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

#ifndef CHANFM_TENSOR_HPP
#define CHANFM_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chanfm {

/// Dense row-major tensor of 64-bit reals. The shape/data-length invariant is
/// established by the constructors and preserved by every operation here.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s);
    Tensor(std::vector<std::size_t> s, std::vector<double> d);

    static Tensor zeros(std::vector<std::size_t> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<std::size_t> s, double v);
    /// N(0, stddev^2) entries drawn in row-major order.
    static Tensor randn(std::vector<std::size_t> s, std::mt19937_64 &rng, double stddev = 1.0);

    std::size_t size() const { return data.size(); }
    std::size_t ndim() const { return shape.size(); }
    /// Row view over the last axis: cols() is the last dimension (1 for
    /// scalars), rows() the product of the rest.
    std::size_t rows() const;
    std::size_t cols() const;

    double &at(std::size_t i, std::size_t j);
    double at(std::size_t i, std::size_t j) const;

    bool same_shape(const Tensor &other) const { return shape == other.shape; }
    bool all_finite() const;
    /// "[r x c]" for diagnostics.
    std::string shape_str() const;
};

/// Product of dimension sizes.
std::size_t shape_numel(const std::vector<std::size_t> &shape);

// Kernels used by the autodiff layer. matmul parallelizes over output rows
// with a static schedule; each output element is accumulated sequentially by
// one thread, so results are bit-identical for any thread count.
void matmul_into(const Tensor &a, const Tensor &b, Tensor &out);
void matmul_accumulate(const Tensor &a, const Tensor &b, Tensor &out);
/// out += a * b^T (a: [m x k], b: [n x k], out: [m x n])
void matmul_nt_accumulate(const Tensor &a, const Tensor &b, Tensor &out);
/// out += a^T * b (a: [k x m], b: [k x n], out: [m x n])
void matmul_tn_accumulate(const Tensor &a, const Tensor &b, Tensor &out);

} // namespace chanfm

#endif // CHANFM_TENSOR_HPP
