#include "rlvqc/optim/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rlvqc::optim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tracker {
    const Objective& objective;
    int budget;
    int used = 0;
    std::vector<double> x_best;
    double f_best = kInf;

    bool exhausted() const { return used >= budget; }

    // caller must check exhausted() first
    double eval(const std::vector<double>& x) {
        ++used;
        double f = objective(x);
        if (std::isnan(f)) f = kInf;
        if (f < f_best) {
            f_best = f;
            x_best = x;
        }
        return f;
    }
};

}  // namespace

MinimizeResult minimize(const Objective& objective, std::vector<double> x0,
                        const OptimizerBudget& budget) {
    Tracker tracker{objective, budget.max_evals, 0, {}, kInf};
    if (budget.max_evals < 1) return {std::move(x0), kInf, 0};
    if (x0.empty()) {
        const double f = tracker.eval(x0);
        return {std::move(x0), f, tracker.used};
    }

    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> simplex;
    std::vector<double> fval;
    simplex.reserve(dim + 1);
    simplex.push_back(x0);
    fval.push_back(tracker.eval(x0));
    for (std::size_t i = 0; i < dim && !tracker.exhausted(); ++i) {
        std::vector<double> v = x0;
        v[i] += budget.initial_step;
        simplex.push_back(v);
        fval.push_back(tracker.eval(v));
    }

    const auto finish = [&] {
        return MinimizeResult{tracker.x_best.empty() ? std::move(x0) : std::move(tracker.x_best),
                              tracker.f_best, tracker.used};
    };
    if (simplex.size() < dim + 1) return finish();

    std::vector<std::size_t> order(dim + 1);
    while (!tracker.exhausted()) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fval[a] < fval[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[dim];
        const std::size_t second_worst = order[dim - 1];

        // converged when values and vertices have collapsed
        double f_spread = 0.0, x_spread = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) {
            f_spread = std::max(f_spread, std::abs(fval[i] - fval[best]));
            for (std::size_t d = 0; d < dim; ++d)
                x_spread = std::max(x_spread, std::abs(simplex[i][d] - simplex[best][d]));
        }
        if (f_spread <= budget.tolerance && x_spread <= budget.tolerance) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        const auto blend = [&](double t) {
            std::vector<double> v(dim);
            for (std::size_t d = 0; d < dim; ++d)
                v[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
            return v;
        };

        auto reflected = blend(-1.0);
        const double fr = tracker.eval(reflected);
        if (fr < fval[best]) {
            if (tracker.exhausted()) break;
            auto expanded = blend(-2.0);
            const double fe = tracker.eval(expanded);
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                fval[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                fval[worst] = fr;
            }
            continue;
        }
        if (fr < fval[second_worst]) {
            simplex[worst] = std::move(reflected);
            fval[worst] = fr;
            continue;
        }
        if (tracker.exhausted()) break;
        const bool outside = fr < fval[worst];
        auto contracted = blend(outside ? -0.5 : 0.5);
        const double fc = tracker.eval(contracted);
        if (fc < (outside ? fr : fval[worst])) {
            simplex[worst] = std::move(contracted);
            fval[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= dim && !tracker.exhausted(); ++i) {
            if (i == best) continue;
            for (std::size_t d = 0; d < dim; ++d)
                simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            fval[i] = tracker.eval(simplex[i]);
        }
    }
    return finish();
}

}  // namespace rlvqc::optim
