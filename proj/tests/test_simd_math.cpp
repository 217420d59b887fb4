// Direct accuracy tests of the AVX2 vector transcendentals against libm.
// Compiled with -mavx2 -mfma on x86-64; every case is skipped at runtime on
// hosts without the instructions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "avx2_math.hpp"

using namespace a2g::avx2m;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool have_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double ulps(double got, double want) {
    if (got == want) return 0.0;
    const double step = std::abs(std::nexttoward(want, kInf) - want);
    return std::abs(got - want) / step;
}

template <typename VecFn, typename RefFn>
double worst_ulps(VecFn vec, RefFn ref, double lo, double hi, bool log_spaced, int samples) {
    std::mt19937_64 rng(424242);
    double worst = 0.0;
    for (int i = 0; i < samples; i += 4) {
        double xs[4];
        for (double& x : xs) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            x = log_spaced ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
        }
        double out[4];
        _mm256_storeu_pd(out, vec(_mm256_loadu_pd(xs)));
        for (int k = 0; k < 4; ++k) {
            worst = std::max(worst, ulps(out[k], ref(xs[k])));
        }
    }
    return worst;
}

double first_lane(__m256d v) {
    double out[4];
    _mm256_storeu_pd(out, v);
    return out[0];
}

}  // namespace

TEST_CASE("vector exp stays within 4 ulp of libm") {
    if (!have_avx2()) return;
    CHECK(worst_ulps([](__m256d v) { return exp_pd(v); },
                     [](double x) { return std::exp(x); }, -700.0, 700.0, false,
                     400000) <= 4.0);
    CHECK(first_lane(exp_pd(_mm256_set1_pd(0.0))) == 1.0);
    CHECK(first_lane(exp_pd(_mm256_set1_pd(-kInf))) == 0.0);
    CHECK(first_lane(exp_pd(_mm256_set1_pd(kInf))) == kInf);
    CHECK(first_lane(exp_pd(_mm256_set1_pd(-1000.0))) == 0.0);
    CHECK(first_lane(exp_pd(_mm256_set1_pd(1000.0))) == kInf);
}

TEST_CASE("vector log stays within 4 ulp of libm across decades") {
    if (!have_avx2()) return;
    CHECK(worst_ulps([](__m256d v) { return log_pd(v); },
                     [](double x) { return std::log(x); }, 1e-300, 1e300, true,
                     400000) <= 4.0);
    // the hard stretch is around 1 where the result crosses zero
    CHECK(worst_ulps([](__m256d v) { return log_pd(v); },
                     [](double x) { return std::log(x); }, 0.5, 2.0, false, 400000) <= 4.0);
    CHECK(first_lane(log_pd(_mm256_set1_pd(1.0))) == 0.0);
    CHECK(first_lane(log10_pd(_mm256_set1_pd(1000.0))) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(first_lane(log2_pd(_mm256_set1_pd(8.0))) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("vector sin stays within 4 ulp of libm through argument reduction") {
    if (!have_avx2()) return;
    CHECK(worst_ulps([](__m256d v) { return sin_pd(v); },
                     [](double x) { return std::sin(x); }, -10.0, 10.0, false,
                     400000) <= 4.0);
    // element counts up to 2^20 put array-factor arguments in the millions
    CHECK(worst_ulps([](__m256d v) { return sin_pd(v); },
                     [](double x) { return std::sin(x); }, -3.3e6, 3.3e6, false,
                     400000) <= 4.0);
    CHECK(first_lane(sin_pd(_mm256_set1_pd(0.0))) == 0.0);
    CHECK(first_lane(sin_pd(_mm256_set1_pd(-0.5))) ==
          -first_lane(sin_pd(_mm256_set1_pd(0.5))));
}

TEST_CASE("vector asin stays within 4 ulp of libm on [-1, 1]") {
    if (!have_avx2()) return;
    CHECK(worst_ulps([](__m256d v) { return asin_pd(v); },
                     [](double x) { return std::asin(x); }, -1.0, 1.0, false,
                     400000) <= 4.0);
    // both sides of the branch split at 0.625
    CHECK(worst_ulps([](__m256d v) { return asin_pd(v); },
                     [](double x) { return std::asin(x); }, 0.6, 0.65, false,
                     400000) <= 4.0);
    CHECK(ulps(first_lane(asin_pd(_mm256_set1_pd(1.0))), std::asin(1.0)) <= 1.0);
    CHECK(ulps(first_lane(asin_pd(_mm256_set1_pd(-1.0))), std::asin(-1.0)) <= 1.0);
    CHECK(first_lane(asin_pd(_mm256_set1_pd(0.0))) == 0.0);
    CHECK(first_lane(asin_pd(_mm256_set1_pd(1e-12))) == 1e-12);
}

TEST_CASE("exp10 composes exp and the ln(10) constant") {
    if (!have_avx2()) return;
    CHECK(first_lane(exp10_pd(_mm256_set1_pd(2.0))) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(first_lane(exp10_pd(_mm256_set1_pd(-0.1))) ==
          doctest::Approx(std::pow(10.0, -0.1)).epsilon(1e-14));
    CHECK(first_lane(exp10_pd(_mm256_set1_pd(-kInf))) == 0.0);
}
