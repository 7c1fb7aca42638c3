#include "doctest.h"

#include "rlvqc/sim/kernels.hpp"
#include "test_util.hpp"

#include <cstring>
#include <numbers>

using namespace rlvqc;
using namespace rlvqc::sim;

namespace {

bool bitwise_equal(std::span<const cplx> a, std::span<const cplx> b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

std::array<cplx, 4> random_2x2(Rng& rng) {
    std::array<cplx, 4> m;
    for (cplx& e : m) e = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return m;
}

}  // namespace

TEST_CASE("scalar kernel basics") {
    const KernelTable& k = scalar_kernels();
    std::vector<cplx> amps{{1, 0}, {0, 0}};
    CHECK(k.norm_sq(amps.data(), 2) == doctest::Approx(1.0));

    const auto h = hadamard_matrix();
    k.apply_1q(amps.data(), 1, 0, h.data());
    double p[2];
    k.probabilities(amps.data(), 2, p);
    CHECK(p[0] == doctest::Approx(0.5));
    CHECK(p[1] == doctest::Approx(0.5));

    const double w[2] = {3.0, 5.0};
    CHECK(k.weighted_prob_sum(amps.data(), 2, w) == doctest::Approx(4.0));
}

TEST_CASE("backend listing includes scalar first") {
    const auto backends = available_kernels();
    REQUIRE(backends.size() >= 1);
    CHECK(std::string(backends[0]->name) == "scalar");
    MESSAGE("active backend: ", active_kernels().name);
}

// Every SIMD backend must match the scalar reference bit for bit: same
// multiply/add order, no FMA contraction, same reduction tree.
TEST_CASE("simd backends are bitwise equivalent to scalar") {
    const auto backends = available_kernels();
    const KernelTable& ref = scalar_kernels();
    for (std::size_t bi = 1; bi < backends.size(); ++bi) {
        const KernelTable& alt = *backends[bi];
        CAPTURE(alt.name);
        Rng rng(0xbeef01);
        for (int n = 1; n <= 8; ++n) {
            for (int rep = 0; rep < 8; ++rep) {
                const auto base = testutil::random_state(n, rng);
                const int t = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
                int t2 = t;
                while (t2 == t && n > 1)
                    t2 = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));

                {
                    auto a = base, b = base;
                    const auto m = random_2x2(rng);
                    ref.apply_1q(a.data(), n, t, m.data());
                    alt.apply_1q(b.data(), n, t, m.data());
                    CHECK(bitwise_equal(a, b));
                }
                if (n > 1) {
                    auto a = base, b = base;
                    std::array<cplx, 16> m;
                    for (cplx& e : m) e = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
                    ref.apply_2q(a.data(), n, t, t2, m.data());
                    alt.apply_2q(b.data(), n, t, t2, m.data());
                    CHECK(bitwise_equal(a, b));
                }
                {
                    auto a = base, b = base;
                    const cplx d0{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
                    const cplx d1{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
                    ref.apply_diag1(a.data(), n, t, d0, d1);
                    alt.apply_diag1(b.data(), n, t, d0, d1);
                    CHECK(bitwise_equal(a, b));
                }
                if (n > 1) {
                    auto a = base, b = base;
                    const cplx e0{0.8, -0.6}, e1{0.6, 0.8};
                    ref.apply_parity_phase(a.data(), n, t, t2, e0, e1);
                    alt.apply_parity_phase(b.data(), n, t, t2, e0, e1);
                    CHECK(bitwise_equal(a, b));
                }
                if (n > 1) {
                    auto a = base, b = base;
                    ref.apply_cx(a.data(), n, t, t2);
                    alt.apply_cx(b.data(), n, t, t2);
                    CHECK(bitwise_equal(a, b));
                }
                {
                    std::vector<double> pa(base.size()), pb(base.size());
                    ref.probabilities(base.data(), base.size(), pa.data());
                    alt.probabilities(base.data(), base.size(), pb.data());
                    CHECK(std::memcmp(pa.data(), pb.data(), pa.size() * sizeof(double)) == 0);

                    std::vector<double> w(base.size());
                    for (double& x : w) x = rng.uniform(-2.0, 2.0);
                    CHECK(ref.norm_sq(base.data(), base.size()) ==
                          alt.norm_sq(base.data(), base.size()));
                    CHECK(ref.weighted_prob_sum(base.data(), base.size(), w.data()) ==
                          alt.weighted_prob_sum(base.data(), base.size(), w.data()));
                }
            }
        }
    }
}
