#include <doctest.h>

#include <cmath>
#include <random>

#include "plategoal/assembly.hpp"
#include "plategoal/benchmarks.hpp"
#include "plategoal/simd.hpp"

using namespace plategoal;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const simd::Kernels* fast = simd::avx2_kernels();
  if (!fast) {
    MESSAGE("AVX2 kernels unavailable; only the scalar path is exercised");
    return;
  }
  const simd::Kernels& ref = simd::scalar_kernels();
  CHECK(fast->isa == simd::Isa::avx2);
  std::mt19937 rng(21);
  // Lengths straddling the 4-wide and 16-wide unrolls.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 15u, 16u, 17u, 63u, 1000u, 4099u}) {
    const auto x = random_vector(n, rng), y = random_vector(n, rng);
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y[i]);
    CHECK(std::abs(fast->dot(x.data(), y.data(), n) - ref.dot(x.data(), y.data(), n)) <= 1e-14 * (1.0 + mag));

    auto y1 = y, y2 = y;
    fast->axpy(0.37, x.data(), y1.data(), n);
    ref.axpy(0.37, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15 * (1 + std::abs(y2[i])));

    y1 = y;
    y2 = y;
    fast->xpay(x.data(), -1.3, y1.data(), n);
    ref.xpay(x.data(), -1.3, y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15 * (1 + std::abs(y2[i])));
  }

  // spmv on an assembled stiffness matrix with rows of varying length.
  Mesh m = refine_uniform(refine_uniform(l_shape_mesh()));
  m = refine_nvb(m, std::vector<int>{0, 5, 17});
  const P2DofMap dofs(m);
  const SparseSpdMatrix A = assemble_aip(m, dofs, 20.0);
  const auto x = random_vector(A.size(), rng);
  std::vector<double> y1(A.size()), y2(A.size());
  fast->spmv(A.size(), A.row_ptr().data(), A.col().data(), A.values().data(), x.data(), y1.data());
  ref.spmv(A.size(), A.row_ptr().data(), A.col().data(), A.values().data(), x.data(), y2.data());
  for (int i = 0; i < A.size(); ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-12 * A.max_abs());
}

TEST_CASE("active kernels are one of the two variants") {
  const simd::Kernels& k = simd::active();
  CHECK((k.isa == simd::Isa::scalar || k.isa == simd::Isa::avx2));
  CHECK(std::string(simd::isa_name(k.isa)).size() > 0);
}
