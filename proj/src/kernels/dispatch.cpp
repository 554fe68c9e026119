#include <cstdlib>
#include <cstring>

#include "folia/kernels.hpp"

namespace folia::kernels {

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(FOLIA_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  const char* env = std::getenv("FOLIA_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

void eval(Isa isa, const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound) {
#ifdef FOLIA_HAVE_AVX2
  if (isa == Isa::Avx2 && avx2_available()) {
    eval_avx2(p, x, y, n, value, bound);
    return;
  }
#endif
  (void)isa;
  eval_scalar(p, x, y, n, value, bound);
}

void eval(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound) {
  static const Isa isa = active_isa();
  eval(isa, p, x, y, n, value, bound);
}

#ifndef FOLIA_HAVE_AVX2
void eval_avx2(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound) {
  eval_scalar(p, x, y, n, value, bound);
}
#endif

}  // namespace folia::kernels
