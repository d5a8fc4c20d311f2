#pragma once
// Prime-field vector kernels used by dense Gaussian elimination.
//
// Every routine has a portable scalar reference. An AVX2 variant is compiled
// into a separate translation unit and picked at runtime when the CPU reports
// support; set NFOLD_FORCE_SCALAR=1 in the environment to pin the reference
// path. Both variants must produce identical output (see test_kernels).

#include <cstddef>
#include <cstdint>
#include <span>

namespace nfold::kernels {

// Largest modulus the vector kernels accept: products of two residues plus a
// residue must fit in 32 bits.
inline constexpr std::uint32_t kMaxModulus = 65521;

// dst[i] = (dst[i] + factor * src[i]) mod p. All inputs are reduced residues.
using AxpyFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                        std::uint32_t factor, std::uint32_t p);
// v[i] = (factor * v[i]) mod p.
using ScaleFn = void (*)(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);

struct KernelTable {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

namespace scalar {
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
          std::uint32_t p);
void scale(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool compiled();
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
          std::uint32_t p);
void scale(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p);
}  // namespace avx2

const KernelTable& scalar_table();
// Null when AVX2 was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

// The table selected for this process.
const KernelTable& active();

inline void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t factor, std::uint32_t p) {
  active().axpy(dst, src, factor, p);
}

inline void scale_mod(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  active().scale(v, factor, p);
}

}  // namespace nfold::kernels
