#pragma once

// OpenBLAS 0.3.20 picks its Cooperlake kernels on AVX-512 CPUs with AMX/FP16
// (Sapphire Rapids class), where their dgemm returns wrong results for
// n >= 256. The kernel is chosen once, from OPENBLAS_CORETYPE, while
// libopenblas initializes, i.e. before main. Executables call this first: on
// AVX-512 machines without an explicit choice it sets Haswell and re-executes
// the process. An explicit OPENBLAS_CORETYPE from the user is left alone.

#include <cstdlib>
#include <unistd.h>

namespace spinwit {

inline void ensure_safe_blas_kernel(char** argv) {
  if (std::getenv("OPENBLAS_CORETYPE") != nullptr) return;
  __builtin_cpu_init();
  if (!__builtin_cpu_supports("avx512f")) return;
  setenv("OPENBLAS_CORETYPE", "Haswell", 0);
  execv("/proc/self/exe", argv);
  // exec failed: carry on; the eigensolver's own residual check reports a
  // faulty kernel if it matters.
}

}  // namespace spinwit
