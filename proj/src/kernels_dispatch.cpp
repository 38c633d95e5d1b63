#include "tsd/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace tsd::kernels {

#if !defined(TSD_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& select() {
    const char* pref = std::getenv("TSD_KERNELS");
    const KernelTable* avx2 = avx2_table();
    const bool avx2_usable = avx2 != nullptr && cpu_has_avx2();
    if (pref == nullptr || std::strcmp(pref, "auto") == 0)
        return avx2_usable ? *avx2 : scalar_table();
    if (std::strcmp(pref, "scalar") == 0) return scalar_table();
    if (std::strcmp(pref, "avx2") == 0) {
        if (!avx2_usable)
            throw std::runtime_error("TSD_KERNELS=avx2 but AVX2 kernels are unavailable");
        return *avx2;
    }
    throw std::runtime_error(std::string("unknown TSD_KERNELS value: ") + pref);
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace tsd::kernels
