#include "nfold/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "nfold/error.hpp"

namespace nfold {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleRing: return "incompatible-ring";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::Unsupported: return "unsupported-operation";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotQuotientModule: return "not-a-quotient-module";
    case ErrorKind::Precondition: return "precondition-violated";
  }
  return "error";
}

}  // namespace nfold

namespace nfold::kernels {

#ifndef NFOLD_HAVE_AVX2_TU
namespace avx2 {
bool compiled() { return false; }
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
          std::uint32_t p) {
  scalar::axpy(dst, src, factor, p);
}
void scale(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  scalar::scale(v, factor, p);
}
}  // namespace avx2
#endif

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &scalar::axpy, &scalar::scale};
  return table;
}

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", &avx2::axpy, &avx2::scale};
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2::compiled() && __builtin_cpu_supports("avx2")) return &table;
#endif
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const char* force = std::getenv("NFOLD_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0) return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace nfold::kernels
