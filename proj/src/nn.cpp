#include "aircal/nn.hpp"

#include <cmath>

#include "aircal/errors.hpp"
#include "aircal/rng.hpp"

namespace aircal {

std::size_t Model::param_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.weights.size() + l.bias.size();
    return n;
}

void Model::validate() const {
    if (layers.empty()) throw ConfigError("model has no layers");
    if (head_start == 0 || head_start > layers.size())
        throw ConfigError("head_start out of range");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& l = layers[i];
        if (l.bias.size() != l.fan_out())
            throw DimensionError("layer bias size does not match fan_out");
        if (i > 0 && layers[i - 1].fan_out() != l.fan_in())
            throw DimensionError("consecutive layer shapes do not compose");
    }
}

const Matrix& ForwardCache::encoder_output(const Model& m) const {
    return activations.at(m.head_start - 1);
}

Gradients Gradients::zeros_like(const Model& m) {
    Gradients g;
    g.layers.reserve(m.layers.size());
    for (const auto& l : m.layers) {
        g.layers.push_back({Matrix(l.fan_in(), l.fan_out()),
                            std::vector<double>(l.fan_out(), 0.0)});
    }
    return g;
}

void Gradients::add(const Gradients& other) {
    if (layers.size() != other.layers.size())
        throw DimensionError("gradient layer counts differ");
    for (std::size_t l = 0; l < layers.size(); ++l) {
        auto& a = layers[l];
        const auto& b = other.layers[l];
        if (!a.d_weights.same_shape(b.d_weights) || a.d_bias.size() != b.d_bias.size())
            throw DimensionError("gradient shapes differ");
        for (std::size_t i = 0; i < a.d_weights.size(); ++i)
            a.d_weights.data()[i] += b.d_weights.data()[i];
        for (std::size_t i = 0; i < a.d_bias.size(); ++i) a.d_bias[i] += b.d_bias[i];
    }
}

namespace {

Matrix affine(const Matrix& x, const DenseLayer& l) {
    Matrix z = matmul(x, l.weights);
    for (std::size_t r = 0; r < z.rows(); ++r) {
        double* row = z.data() + r * z.cols();
        for (std::size_t c = 0; c < z.cols(); ++c) row[c] += l.bias[c];
    }
    return z;
}

Matrix activate(const Matrix& z, Activation act) {
    Matrix a = z;
    switch (act) {
        case Activation::identity:
            break;
        case Activation::relu:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a.data()[i] < 0.0) a.data()[i] = 0.0;
            break;
        case Activation::softmax:
            for (std::size_t r = 0; r < a.rows(); ++r) {
                auto row = a.row(r);
                double mx = row[0];
                for (double v : row)
                    if (v > mx) mx = v;
                double sum = 0.0;
                for (double& v : row) {
                    v = std::exp(v - mx);
                    sum += v;
                }
                for (double& v : row) v /= sum;
            }
            break;
    }
    return a;
}

}  // namespace

std::pair<Matrix, ForwardCache> forward(const Model& m, const Matrix& x) {
    m.validate();
    if (x.cols() != m.input_dim())
        throw DimensionError("forward: input width does not match first layer fan_in");
    ForwardCache cache;
    cache.input = x;
    cache.pre_activations.reserve(m.layers.size());
    cache.activations.reserve(m.layers.size());
    const Matrix* prev = &cache.input;
    for (const auto& layer : m.layers) {
        Matrix z = affine(*prev, layer);
        Matrix a = activate(z, layer.activation);
        cache.pre_activations.push_back(std::move(z));
        cache.activations.push_back(std::move(a));
        prev = &cache.activations.back();
    }
    return {cache.activations.back(), std::move(cache)};
}

Matrix forward_probs(const Model& m, const Matrix& x) {
    m.validate();
    if (x.cols() != m.input_dim())
        throw DimensionError("forward: input width does not match first layer fan_in");
    Matrix a = x;
    for (const auto& layer : m.layers) a = activate(affine(a, layer), layer.activation);
    return a;
}

Matrix encode(const Model& m, const Matrix& x) {
    m.validate();
    if (x.cols() != m.input_dim())
        throw DimensionError("encode: input width does not match first layer fan_in");
    Matrix a = x;
    for (std::size_t l = 0; l < m.head_start; ++l)
        a = activate(affine(a, m.layers[l]), m.layers[l].activation);
    return a;
}

Gradients backward(const Model& m, const ForwardCache& cache, const Matrix& d_out,
                   double head_grad_scale) {
    m.validate();
    const std::size_t n_layers = m.layers.size();
    if (cache.activations.size() != n_layers || cache.pre_activations.size() != n_layers)
        throw StateError("backward: cache does not match model layer count");
    if (!d_out.same_shape(cache.activations.back()))
        throw DimensionError("backward: d_out shape does not match forward output");

    Gradients grads = Gradients::zeros_like(m);
    Matrix d_act = d_out;
    for (std::size_t li = n_layers; li-- > 0;) {
        const DenseLayer& layer = m.layers[li];
        const Matrix& z = cache.pre_activations[li];
        const Matrix& a = cache.activations[li];
        if (!z.same_shape(d_act))
            throw StateError("backward: cache activation shapes do not match model");

        // dL/dz for this layer
        Matrix delta(d_act.rows(), d_act.cols());
        switch (layer.activation) {
            case Activation::identity:
                delta = d_act;
                break;
            case Activation::relu:
                for (std::size_t i = 0; i < delta.size(); ++i)
                    delta.data()[i] = z.data()[i] > 0.0 ? d_act.data()[i] : 0.0;
                break;
            case Activation::softmax:
                // dz_j = q_j * (da_j - sum_k da_k q_k)
                for (std::size_t r = 0; r < delta.rows(); ++r) {
                    auto qrow = a.row(r);
                    auto drow = d_act.row(r);
                    double dot = 0.0;
                    for (std::size_t k = 0; k < qrow.size(); ++k) dot += drow[k] * qrow[k];
                    for (std::size_t k = 0; k < qrow.size(); ++k)
                        delta(r, k) = qrow[k] * (drow[k] - dot);
                }
                break;
        }

        const Matrix& prev_act = li == 0 ? cache.input : cache.activations[li - 1];
        grads.layers[li].d_weights = matmul_at_b(prev_act, delta);
        auto& db = grads.layers[li].d_bias;
        for (std::size_t r = 0; r < delta.rows(); ++r) {
            const double* row = delta.data() + r * delta.cols();
            for (std::size_t c = 0; c < delta.cols(); ++c) db[c] += row[c];
        }
        if (li > 0) d_act = matmul_a_bt(delta, layer.weights);
    }

    if (head_grad_scale != 1.0) {
        for (std::size_t li = m.head_start; li < n_layers; ++li) {
            auto& g = grads.layers[li];
            for (std::size_t i = 0; i < g.d_weights.size(); ++i)
                g.d_weights.data()[i] *= head_grad_scale;
            for (double& v : g.d_bias) v *= head_grad_scale;
        }
    }
    return grads;
}

AdamState AdamState::init(const Model& model, AdamConfig cfg) {
    AdamState s;
    s.cfg = cfg;
    s.m = Gradients::zeros_like(model).layers;
    s.v = Gradients::zeros_like(model).layers;
    return s;
}

namespace {

void adam_update(double* param, const double* grad, double* m1, double* m2,
                 std::size_t n, const AdamConfig& c, double bc1, double bc2) {
    for (std::size_t i = 0; i < n; ++i) {
        m1[i] = c.beta1 * m1[i] + (1.0 - c.beta1) * grad[i];
        m2[i] = c.beta2 * m2[i] + (1.0 - c.beta2) * grad[i] * grad[i];
        const double mhat = m1[i] / bc1;
        const double vhat = m2[i] / bc2;
        param[i] -= c.learning_rate * mhat / (std::sqrt(vhat) + c.eps);
    }
}

}  // namespace

void adam_step(Model& model, const Gradients& grads, AdamState& state) {
    if (grads.layers.size() != model.layers.size() || state.m.size() != model.layers.size())
        throw DimensionError("adam_step: layer counts differ");
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.cfg.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.cfg.beta2, static_cast<double>(state.step));
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        auto& layer = model.layers[l];
        const auto& g = grads.layers[l];
        if (!g.d_weights.same_shape(layer.weights) || g.d_bias.size() != layer.bias.size())
            throw DimensionError("adam_step: gradient shapes do not mirror parameters");
        adam_update(layer.weights.data(), g.d_weights.data(), state.m[l].d_weights.data(),
                    state.v[l].d_weights.data(), layer.weights.size(), state.cfg, bc1, bc2);
        adam_update(layer.bias.data(), g.d_bias.data(), state.m[l].d_bias.data(),
                    state.v[l].d_bias.data(), layer.bias.size(), state.cfg, bc1, bc2);
    }
}

Model init_model(const std::vector<std::size_t>& layer_sizes, std::uint64_t seed,
                 std::size_t head_layers) {
    if (layer_sizes.size() < 2) throw ConfigError("init_model: need at least input and output sizes");
    const std::size_t n_layers = layer_sizes.size() - 1;
    if (head_layers == 0 || head_layers >= n_layers)
        throw ConfigError("init_model: head_layers must leave at least one encoder layer");

    Rng rng = derive_rng(seed, Stream::model_init);
    Model m;
    m.head_start = n_layers - head_layers;
    m.layers.reserve(n_layers);
    for (std::size_t l = 0; l < n_layers; ++l) {
        DenseLayer layer;
        const std::size_t fan_in = layer_sizes[l];
        const std::size_t fan_out = layer_sizes[l + 1];
        layer.activation = l + 1 == n_layers ? Activation::softmax : Activation::relu;
        const double limit = layer.activation == Activation::relu
                                 ? std::sqrt(6.0 / static_cast<double>(fan_in))
                                 : std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        layer.weights = Matrix(fan_in, fan_out);
        for (std::size_t i = 0; i < layer.weights.size(); ++i)
            layer.weights.data()[i] = rng.uniform(-limit, limit);
        layer.bias.assign(fan_out, 0.0);
        m.layers.push_back(std::move(layer));
    }
    m.validate();
    return m;
}

}  // namespace aircal
