#pragma once

#include "rlvqc/rng.hpp"

#include <span>
#include <string>
#include <vector>

namespace rlvqc::agent {

struct MlpShape {
    int input_dim = 1;
    std::vector<int> hidden;
    int output_dim = 1;

    std::size_t param_count() const;
    std::vector<int> widths() const;  // input, hidden..., output
    bool operator==(const MlpShape&) const = default;
};

// Fully connected feed-forward net: tanh on hidden layers, linear output.
// Parameters live in one flat vector, per layer W (out x in, row-major)
// followed by b. Forward caches post-activations in a caller-owned
// workspace; backward replays them, so no allocation happens per call.
class Mlp {
  public:
    explicit Mlp(MlpShape shape);

    const MlpShape& shape() const { return shape_; }
    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }

    struct Workspace {
        std::vector<std::vector<double>> act;    // act[0] = input, act[L] = output
        std::vector<double> delta, delta_next;   // backward scratch
    };

    std::span<const double> forward(std::span<const double> input, Workspace& ws) const;

    // Accumulates d(loss)/d(params) into grad given d(loss)/d(output);
    // ws must hold the matching forward pass.
    void backward(const Workspace& ws, std::span<const double> grad_out,
                  std::span<double> grad) const;

    // Orthogonal rows/columns scaled by gain per layer; a zero final gain
    // zeroes the output layer (uniform softmax policy at step 0).
    void init_orthogonal(Rng& rng, double hidden_gain, double final_gain);

    // architecture header + hexfloat parameters; bit-exact round-trip
    std::string to_text() const;
    static Mlp from_text(const std::string& text);

  private:
    MlpShape shape_;
    std::vector<double> params_;
    std::vector<int> widths_;
};

// Adam with bias correction; holds first/second moment state.
class Adam {
  public:
    Adam(std::size_t n, double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);
    void step(std::span<double> params, std::span<const double> grad);

  private:
    double lr_, beta1_, beta2_, eps_;
    std::uint64_t t_ = 0;
    std::vector<double> m_, v_;
};

}  // namespace rlvqc::agent
