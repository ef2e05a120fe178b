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

#ifndef CHANFM_AUTODIFF_HPP
#define CHANFM_AUTODIFF_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chanfm/tensor.hpp"

namespace chanfm {

/// Reverse-mode tape over dense tensors. Values are computed eagerly as the
/// graph is built; one backward pass visits each reachable node exactly once
/// in reverse creation order (creation order is a topological order because
/// inputs always precede their consumers).
class Graph {
  public:
    using NodeId = int;

    enum class Op {
        Input,
        Param,
        Add,
        Mul,
        ScalarMul,
        MatMul,
        Transpose,
        Reshape,
        GatherRows,
        ConcatRows,
        LayerNorm,
        Softmax,
        Gelu,
        Mse,
    };

    static constexpr double kLayerNormEps = 1e-8;

    /// Constant leaf. Never receives a gradient.
    NodeId input(Tensor value);
    /// Trainable leaf. Gradient is accumulated under `name` (unique per graph).
    NodeId param(const std::string &name, Tensor value);

    // Elementwise add/mul accept equal shapes, or a second operand that is a
    // row vector broadcast over the rows of the first.
    NodeId add(NodeId a, NodeId b);
    NodeId mul(NodeId a, NodeId b);
    NodeId scalar_mul(NodeId a, double c);
    NodeId matmul(NodeId a, NodeId b);
    NodeId transpose(NodeId a);
    NodeId reshape(NodeId a, std::vector<std::size_t> shape);
    /// Rows of a 2D tensor selected by index, duplicates allowed. Backward
    /// scatter-adds into the source rows.
    NodeId gather_rows(NodeId a, std::vector<std::size_t> indices);
    /// Vertical concatenation of two 2D tensors with equal column counts.
    NodeId concat_rows(NodeId a, NodeId b);
    /// Per-row normalization over the last axis to mean 0, variance 1.
    /// Affine terms, when wanted, are separate mul/add nodes.
    NodeId layer_norm(NodeId a);
    /// Softmax over the last axis.
    NodeId softmax(NodeId a);
    NodeId gelu(NodeId a);
    /// Scalar mean squared error over all entries.
    NodeId mse(NodeId a, NodeId b);

    const Tensor &value(NodeId id) const;
    /// Gradient of the last backward target w.r.t. node `id`. Zero tensor if
    /// the node was not reached.
    const Tensor &grad(NodeId id) const;

    std::size_t node_count() const { return nodes_.size(); }

    /// Backward from a scalar loss node. Returns d(loss)/d(param) keyed by
    /// parameter name. Intermediate gradients stay readable via grad().
    std::map<std::string, Tensor> forward_backward(NodeId loss);

  private:
    struct Node {
        Op op;
        NodeId a = -1;
        NodeId b = -1;
        Tensor value;
        Tensor grad;
        bool needs_grad = false;
        bool b_broadcast = false;
        double scalar = 0.0;
        std::vector<std::size_t> indices;    // GatherRows
        std::vector<std::size_t> prev_shape; // Reshape
        std::string name;                    // Param
    };

    NodeId push(Node n);
    const Node &node(NodeId id) const;
    void check_id(NodeId id) const;

    std::vector<Node> nodes_;
    std::map<std::string, NodeId> params_;
    Tensor zero_grad_;
};

/// Per-op-kind worst relative error between analytic and central finite
/// difference gradients.
struct GradCheckReport {
    std::map<std::string, double> max_rel_err;
    double tol = 0.0;
    std::size_t n_graphs = 0;

    /// Strict comparison: every op kind must come in under tol.
    bool passed() const;
    std::string summary() const;
};

/// Builds `n_trials` rounds of randomized single-op graphs covering every op
/// kind and finite-difference checks each parameter entry.
GradCheckReport grad_check(std::size_t n_trials, double tol, std::uint64_t seed);

/// Finite-difference check of one custom graph. The builder must construct
/// the same graph for the same inputs; inputs become parameters "p0", "p1"...
using GraphBuilder = std::function<Graph::NodeId(Graph &, const std::vector<Graph::NodeId> &)>;
double max_rel_grad_error(const GraphBuilder &builder, const std::vector<Tensor> &inputs,
                          double fd_step = 1e-5);

} // namespace chanfm

#endif // CHANFM_AUTODIFF_HPP
