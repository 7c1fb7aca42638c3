#include "rlvqc/sim/kernels.hpp"

#include "kernels_detail.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace rlvqc::sim {

namespace detail {
#if RLVQC_HAVE_AVX2_TU
const KernelTable* avx2_table();
#endif
}  // namespace detail

namespace {

std::vector<const KernelTable*> build_backend_list() {
    std::vector<const KernelTable*> list{&scalar_kernels()};
#if RLVQC_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2")) list.push_back(detail::avx2_table());
#endif
    return list;
}

const KernelTable* resolve_active() {
    const auto& backends = available_kernels();
    if (const char* want = std::getenv("RLVQC_KERNELS")) {
        for (const KernelTable* t : backends)
            if (std::strcmp(t->name, want) == 0) return t;
        // unknown name: fall through to the default rather than abort
    }
    return backends.back();
}

}  // namespace

std::span<const KernelTable* const> available_kernels() {
    static const std::vector<const KernelTable*> list = build_backend_list();
    return {list.data(), list.size()};
}

const KernelTable& active_kernels() {
    static const KernelTable* active = resolve_active();
    return *active;
}

}  // namespace rlvqc::sim
