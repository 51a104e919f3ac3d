#pragma once

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <unistd.h>

extern "C" char* openblas_get_corename(void);

namespace pyrage {

/// OpenBLAS's runtime dispatch can fall back to its generic pre-AVX kernels
/// on virtualized CPUs whose model string is masked, costing ~4x. When that
/// happens and the host really has AVX-512, re-exec the process with
/// OPENBLAS_CORETYPE pinned (the variable is only read at library load).
inline void ensure_fast_blas(char** argv) {
    if (std::getenv("OPENBLAS_CORETYPE") || std::getenv("PYRAGE_NO_BLAS_TUNE")) return;
    const char* core = openblas_get_corename();
    if (!core || std::strcmp(core, "Prescott") != 0) return;
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    bool avx512 = false;
    while (std::getline(cpuinfo, line))
        if (line.find("avx512f") != std::string::npos) {
            avx512 = true;
            break;
        }
    if (!avx512) return;
    ::setenv("OPENBLAS_CORETYPE", "SKYLAKEX", 1);
    ::execv("/proc/self/exe", argv);
    // If the re-exec fails we keep running on the slow kernels.
}

}  // namespace pyrage
