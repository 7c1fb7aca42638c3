#include "rlvqc/problems/ising.hpp"

#include <stdexcept>

namespace rlvqc::problems {

double IsingHamiltonian::energy(const std::vector<int>& spins) const {
    if (spins.size() != h.size()) throw std::invalid_argument("spin vector length mismatch");
    double e = c;
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
    for (const auto& [key, coupling] : j)
        e += coupling * spins[static_cast<std::size_t>(key.first)] *
             spins[static_cast<std::size_t>(key.second)];
    return e;
}

double IsingHamiltonian::energy_of_assignment(std::uint64_t assignment) const {
    std::vector<int> spins(h.size());
    for (std::size_t k = 0; k < spins.size(); ++k)
        spins[k] = (assignment & (std::uint64_t{1} << k)) ? -1 : 1;
    return energy(spins);
}

// x_i = (1 - z_i)/2:
//   Q_ii x_i           -> Q_ii/2 - (Q_ii/2) z_i
//   Q_ij x_i x_j       -> Q_ij/4 (1 - z_i - z_j + z_i z_j)
IsingHamiltonian qubo_to_ising(const QuboInstance& qubo) {
    IsingHamiltonian ising;
    ising.h.assign(static_cast<std::size_t>(qubo.n), 0.0);
    ising.c = qubo.offset;
    for (int i = 0; i < qubo.n; ++i) {
        const double d = qubo.at(i, i);
        ising.c += d / 2.0;
        ising.h[static_cast<std::size_t>(i)] -= d / 2.0;
        for (int j = i + 1; j < qubo.n; ++j) {
            const double v = qubo.at(i, j);
            if (v == 0.0) continue;
            ising.c += v / 4.0;
            ising.h[static_cast<std::size_t>(i)] -= v / 4.0;
            ising.h[static_cast<std::size_t>(j)] -= v / 4.0;
            ising.j[{i, j}] += v / 4.0;
        }
    }
    // drop exact zeros so the coupling map stays sparse
    for (auto it = ising.j.begin(); it != ising.j.end();)
        it = it->second == 0.0 ? ising.j.erase(it) : std::next(it);
    return ising;
}

}  // namespace rlvqc::problems
