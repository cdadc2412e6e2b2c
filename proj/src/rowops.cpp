#include "fplevel/rowops.hpp"

#include <cstdlib>

namespace fplevel::rowops {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

const Kernels kScalar{axpy_scalar, scale_scalar, "scalar"};

bool force_scalar() {
  static const bool v = [] {
    const char* env = std::getenv("FPLEVEL_FORCE_SCALAR");
    return env != nullptr && env[0] == '1';
  }();
  return v;
}

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels& select(std::uint32_t p) {
  if (!force_scalar() && p < (1u << 15)) {
    if (const Kernels* k = avx2()) return *k;
  }
  return kScalar;
}

#if !defined(FPLEVEL_HAVE_AVX2)
const Kernels* avx2() { return nullptr; }
#endif

}  // namespace fplevel::rowops
