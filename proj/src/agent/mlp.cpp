#include "rlvqc/agent/mlp.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rlvqc::agent {

std::vector<int> MlpShape::widths() const {
    std::vector<int> w{input_dim};
    w.insert(w.end(), hidden.begin(), hidden.end());
    w.push_back(output_dim);
    return w;
}

std::size_t MlpShape::param_count() const {
    const auto w = widths();
    std::size_t count = 0;
    for (std::size_t l = 0; l + 1 < w.size(); ++l)
        count += static_cast<std::size_t>(w[l + 1]) * w[l] + w[l + 1];
    return count;
}

Mlp::Mlp(MlpShape shape) : shape_(std::move(shape)), widths_(shape_.widths()) {
    for (int w : widths_)
        if (w < 1) throw std::invalid_argument("layer width must be positive");
    params_.assign(shape_.param_count(), 0.0);
}

std::span<const double> Mlp::forward(std::span<const double> input, Workspace& ws) const {
    if (static_cast<int>(input.size()) != shape_.input_dim)
        throw std::invalid_argument("input dimension mismatch");
    const std::size_t layers = widths_.size() - 1;
    ws.act.resize(layers + 1);
    ws.act[0].assign(input.begin(), input.end());
    const double* p = params_.data();
    for (std::size_t l = 0; l < layers; ++l) {
        const int in = widths_[l], out = widths_[l + 1];
        const double* w = p;
        const double* b = p + static_cast<std::size_t>(out) * in;
        p = b + out;
        auto& a = ws.act[l];
        auto& z = ws.act[l + 1];
        z.assign(static_cast<std::size_t>(out), 0.0);
        for (int r = 0; r < out; ++r) {
            double acc = b[r];
            const double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) acc += row[c] * a[static_cast<std::size_t>(c)];
            z[static_cast<std::size_t>(r)] = l + 1 == layers ? acc : std::tanh(acc);
        }
    }
    return ws.act.back();
}

void Mlp::backward(const Workspace& ws, std::span<const double> grad_out,
                   std::span<double> grad) const {
    if (grad.size() != params_.size()) throw std::invalid_argument("gradient size mismatch");
    const std::size_t layers = widths_.size() - 1;
    if (ws.act.size() != layers + 1) throw std::invalid_argument("workspace missing forward pass");

    auto& delta = const_cast<Workspace&>(ws).delta;
    auto& delta_next = const_cast<Workspace&>(ws).delta_next;
    delta.assign(grad_out.begin(), grad_out.end());

    // parameter block offsets per layer
    std::vector<std::size_t> offset(layers);
    std::size_t off = 0;
    for (std::size_t l = 0; l < layers; ++l) {
        offset[l] = off;
        off += static_cast<std::size_t>(widths_[l + 1]) * widths_[l] + widths_[l + 1];
    }

    for (std::size_t l = layers; l-- > 0;) {
        const int in = widths_[l], out = widths_[l + 1];
        const double* w = params_.data() + offset[l];
        double* gw = grad.data() + offset[l];
        double* gb = gw + static_cast<std::size_t>(out) * in;
        const auto& a = ws.act[l];
        for (int r = 0; r < out; ++r) {
            const double d = delta[static_cast<std::size_t>(r)];
            double* grow = gw + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) grow[c] += d * a[static_cast<std::size_t>(c)];
            gb[r] += d;
        }
        if (l == 0) break;
        delta_next.assign(static_cast<std::size_t>(in), 0.0);
        for (int r = 0; r < out; ++r) {
            const double d = delta[static_cast<std::size_t>(r)];
            const double* row = w + static_cast<std::size_t>(r) * in;
            for (int c = 0; c < in; ++c) delta_next[static_cast<std::size_t>(c)] += d * row[c];
        }
        // tanh' recovered from the cached post-activation
        const auto& post = ws.act[l];
        for (int c = 0; c < in; ++c)
            delta_next[static_cast<std::size_t>(c)] *=
                1.0 - post[static_cast<std::size_t>(c)] * post[static_cast<std::size_t>(c)];
        std::swap(delta, delta_next);
    }
}

namespace {

// Gram-Schmidt over the shorter side of a Gaussian matrix.
void orthogonal_fill(double* w, int out, int in, double gain, Rng& rng) {
    const bool by_rows = out <= in;
    const int vecs = by_rows ? out : in;
    const int len = by_rows ? in : out;
    std::vector<std::vector<double>> basis(static_cast<std::size_t>(vecs),
                                           std::vector<double>(static_cast<std::size_t>(len)));
    for (auto& v : basis)
        for (double& x : v) x = rng.normal();
    for (int i = 0; i < vecs; ++i) {
        auto& vi = basis[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            const auto& vj = basis[static_cast<std::size_t>(j)];
            double dot = 0.0;
            for (int k = 0; k < len; ++k)
                dot += vi[static_cast<std::size_t>(k)] * vj[static_cast<std::size_t>(k)];
            for (int k = 0; k < len; ++k)
                vi[static_cast<std::size_t>(k)] -= dot * vj[static_cast<std::size_t>(k)];
        }
        double norm = 0.0;
        for (double x : vi) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-12) norm = 1.0;  // degenerate draw; keep direction as-is
        for (double& x : vi) x /= norm;
    }
    for (int r = 0; r < out; ++r)
        for (int c = 0; c < in; ++c)
            w[static_cast<std::size_t>(r) * in + c] =
                gain * (by_rows ? basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                                : basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
}

}  // namespace

void Mlp::init_orthogonal(Rng& rng, double hidden_gain, double final_gain) {
    const std::size_t layers = widths_.size() - 1;
    double* p = params_.data();
    for (std::size_t l = 0; l < layers; ++l) {
        const int in = widths_[l], out = widths_[l + 1];
        const double gain = l + 1 == layers ? final_gain : hidden_gain;
        if (gain == 0.0) {
            for (std::size_t i = 0; i < static_cast<std::size_t>(out) * in; ++i) p[i] = 0.0;
        } else {
            orthogonal_fill(p, out, in, gain, rng);
        }
        p += static_cast<std::size_t>(out) * in;
        for (int r = 0; r < out; ++r) *p++ = 0.0;  // biases
    }
}

std::string Mlp::to_text() const {
    std::ostringstream out;
    out << "mlp";
    for (int w : widths_) out << ' ' << w;
    out << "\n";
    char buf[64];
    for (double v : params_) {
        std::snprintf(buf, sizeof buf, "%a", v);
        out << buf << "\n";
    }
    return out.str();
}

Mlp Mlp::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    if (!(in >> tag) || tag != "mlp") throw std::invalid_argument("bad mlp header");
    std::vector<int> widths;
    std::string tok;
    std::getline(in, tok);
    {
        std::istringstream head(tok);
        int w;
        while (head >> w) widths.push_back(w);
    }
    if (widths.size() < 2) throw std::invalid_argument("mlp header needs >= 2 widths");
    MlpShape shape;
    shape.input_dim = widths.front();
    shape.output_dim = widths.back();
    shape.hidden.assign(widths.begin() + 1, widths.end() - 1);
    Mlp net(shape);
    for (double& v : net.params_) {
        if (!(in >> tok)) throw std::invalid_argument("truncated mlp parameters");
        v = std::strtod(tok.c_str(), nullptr);
    }
    return net;
}

Adam::Adam(std::size_t n, double lr, double beta1, double beta2, double eps)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(n, 0.0), v_(n, 0.0) {}

void Adam::step(std::span<double> params, std::span<const double> grad) {
    if (params.size() != m_.size() || grad.size() != m_.size())
        throw std::invalid_argument("adam state size mismatch");
    ++t_;
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < m_.size(); ++i) {
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
        params[i] -= lr_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
    }
}

}  // namespace rlvqc::agent
