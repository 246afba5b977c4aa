#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aircal/matrix.hpp"

namespace aircal {

enum class Activation { relu, softmax, identity };

struct DenseLayer {
    Matrix weights;             // fan_in x fan_out
    std::vector<double> bias;   // fan_out
    Activation activation = Activation::identity;

    std::size_t fan_in() const { return weights.rows(); }
    std::size_t fan_out() const { return weights.cols(); }
};

// Feed-forward net with an explicit encoder/head boundary: layers
// [0, head_start) are the feature encoder, layers [head_start, size) the
// histogram head whose gradients can be sign-flipped in backward().
struct Model {
    std::vector<DenseLayer> layers;
    std::size_t head_start = 0;

    std::size_t input_dim() const { return layers.front().fan_in(); }
    std::size_t output_dim() const { return layers.back().fan_out(); }
    std::size_t param_count() const;

    // shapes compose, bias sizes match, 0 < head_start <= layer count
    void validate() const;
};

struct ForwardCache {
    Matrix input;
    std::vector<Matrix> pre_activations;  // one per layer
    std::vector<Matrix> activations;      // one per layer

    // encoder output z = F_theta(x), the features the head consumes
    const Matrix& encoder_output(const Model& m) const;
};

struct LayerGrads {
    Matrix d_weights;
    std::vector<double> d_bias;
};

struct Gradients {
    std::vector<LayerGrads> layers;

    static Gradients zeros_like(const Model& m);
    void add(const Gradients& other);
};

// Full forward pass. Returns the output distribution batch Q (one row per
// input row) and the cache needed by backward().
std::pair<Matrix, ForwardCache> forward(const Model& m, const Matrix& x);

// Forward without keeping a cache.
Matrix forward_probs(const Model& m, const Matrix& x);

// Encoder layers only.
Matrix encode(const Model& m, const Matrix& x);

// Backprop of dL/dQ through the net. Parameter gradients of the head
// layers are multiplied by head_grad_scale after the plain chain rule is
// evaluated; the signal crossing into the encoder is left untouched.
// head_grad_scale = -1 makes the head ascend the loss the encoder
// descends, which is the whole min-max trick; +1 is ordinary backprop.
Gradients backward(const Model& m, const ForwardCache& cache, const Matrix& d_out,
                   double head_grad_scale = 1.0);

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    AdamConfig cfg;
    std::int64_t step = 0;
    std::vector<LayerGrads> m;  // first moments, mirroring parameter shapes
    std::vector<LayerGrads> v;  // second moments

    static AdamState init(const Model& model, AdamConfig cfg);
};

// Bias-corrected Adam update in place.
void adam_step(Model& model, const Gradients& grads, AdamState& state);

// He-uniform init for ReLU layers, Glorot-uniform for the rest, zero
// biases. layer_sizes = {input_dim, hidden..., output_dim}; hidden layers
// get ReLU, the final layer softmax. head_layers counts layers assigned
// to the head, from the output side.
Model init_model(const std::vector<std::size_t>& layer_sizes, std::uint64_t seed,
                 std::size_t head_layers = 1);

}  // namespace aircal
