#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "fplevel/rowops.hpp"

using namespace fplevel;

namespace {

std::vector<std::uint32_t> random_row(std::size_t n, std::uint32_t p, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels compute modular axpy and scale") {
  const auto& k = rowops::scalar();
  std::uint32_t p = 7;
  std::vector<std::uint32_t> dst{1, 6, 0, 3};
  std::vector<std::uint32_t> src{2, 5, 4, 6};
  k.axpy(dst.data(), src.data(), 3, p, dst.size());
  CHECK(dst == std::vector<std::uint32_t>{0, 0, 5, 0});
  k.scale(dst.data(), 4, p, dst.size());
  CHECK(dst == std::vector<std::uint32_t>{0, 0, 6, 0});
}

TEST_CASE("avx2 kernels agree with scalar on random rows") {
  const rowops::Kernels* vec = rowops::avx2();
  if (!vec) {
    MESSAGE("AVX2 kernels unavailable on this target; nothing to compare");
    return;
  }
  std::mt19937 rng(123);
  // largest admissible modulus for the vector path is just below 2^15
  for (std::uint32_t p : {3u, 5u, 7u, 251u, 7919u, 32749u}) {
    std::uniform_int_distribution<std::uint32_t> cd(0, p - 1);
    for (std::size_t n : {1, 2, 3, 7, 8, 9, 31, 64, 100, 1000}) {
      auto dst = random_row(n, p, rng);
      auto src = random_row(n, p, rng);
      std::uint32_t c = cd(rng);
      auto dst2 = dst;
      rowops::scalar().axpy(dst.data(), src.data(), c, p, n);
      vec->axpy(dst2.data(), src.data(), c, p, n);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(dst == dst2);
      rowops::scalar().scale(dst.data(), c, p, n);
      vec->scale(dst2.data(), c, p, n);
      CHECK(dst == dst2);
    }
  }
}

TEST_CASE("runtime selection respects the modulus bound") {
  // for large p only the scalar path is correct, so select() must return it
  const auto& k = rowops::select(2147483647u);
  CHECK(std::strcmp(k.name, "scalar") == 0);
  // small p: either path is fine, but the kernels must work
  const auto& s = rowops::select(5);
  std::vector<std::uint32_t> row{1, 2, 3, 4, 0};
  s.scale(row.data(), 2, 5, row.size());
  CHECK(row == std::vector<std::uint32_t>{2, 4, 1, 3, 0});
}
