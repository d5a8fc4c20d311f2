#include "nfold/kernels.hpp"

namespace nfold::kernels::scalar {

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
          std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
  }
}

void scale(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (auto& x : v) x = static_cast<std::uint32_t>((f * x) % p);
}

}  // namespace nfold::kernels::scalar
