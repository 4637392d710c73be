#include "djc/kernels/dispatch.hpp"

namespace djc::kernels {

bool cpu_has_avx2() {
#if defined(DJC_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Dispatch resolve() {
#if defined(DJC_HAVE_AVX2)
    if (cpu_has_avx2()) return {"avx2", q_envelope_scan_avx2, complex_matvec_avx2};
#endif
    return {"scalar", q_envelope_scan_scalar, complex_matvec_scalar};
}

}  // namespace

const Dispatch& active() {
    static const Dispatch d = resolve();
    return d;
}

const Dispatch& scalar_dispatch() {
    static const Dispatch d = {"scalar", q_envelope_scan_scalar,
                               complex_matvec_scalar};
    return d;
}

}  // namespace djc::kernels
