#pragma once

#include <functional>
#include <vector>

namespace rlvqc::optim {

// Evaluation budget for the derivative-free minimizer. max_evals is a hard
// cap on objective calls. initial_step sizes the starting simplex (angles
// live on a 2*pi-periodic domain; 0.5 rad explores without wrapping).
struct OptimizerBudget {
    int max_evals = 50;
    double initial_step = 0.5;
    double tolerance = 1e-8;
};

struct MinimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    int evals_used = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Nelder-Mead simplex descent with a strict evaluation cap.
//  - returns the best point EVALUATED (robust under noisy objectives)
//  - NaN objective values are treated as +inf
//  - zero-length x0 returns x0 with a single evaluation
//  - deterministic for fixed inputs
MinimizeResult minimize(const Objective& objective, std::vector<double> x0,
                        const OptimizerBudget& budget);

}  // namespace rlvqc::optim
