#pragma once

#include <cstddef>
#include <cstdint>

namespace fplevel::rowops {

/// Dense F_p row kernels used by the degreewise Gaussian elimination.
/// All values are canonical representatives in [0, p).
struct Kernels {
  /// dst[i] = (dst[i] + c*src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
               std::size_t n);
  /// row[i] = (c*row[i]) mod p
  void (*scale)(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);
  const char* name;
};

/// Portable 64-bit reference kernels.
const Kernels& scalar();

/// AVX2 kernels, valid for p < 2^15. Null when unavailable on this CPU or
/// target.
const Kernels* avx2();

/// Kernels selected at runtime for the given modulus. Set the environment
/// variable FPLEVEL_FORCE_SCALAR=1 to pin the scalar path.
const Kernels& select(std::uint32_t p);

}  // namespace fplevel::rowops
