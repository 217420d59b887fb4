// AVX2+FMA variants of the batch kernels. Compiled with -mavx2 -mfma on
// x86-64 targets only; the dispatcher gates entry on runtime CPU support.

#include <cmath>
#include <numbers>

#include "a2g/geometry.hpp"
#include "a2g/kernels.hpp"
#include "a2g/linkbudget.hpp"
#include "avx2_math.hpp"

namespace a2g::kernels::detail {

namespace {

using avx2m::set1;

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kSpeedOfLight = 299792458.0;

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(set1(-0.0), x); }

inline bool any(__m256d mask) { return _mm256_movemask_pd(mask) != 0; }

void plos_avx2(const double* theta_deg, double* out, std::size_t n, const Environment& env) {
    const __m256d a = set1(env.a);
    const __m256d neg_b = set1(-env.b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d th = _mm256_loadu_pd(theta_deg + i);
        const __m256d bad = _mm256_or_pd(_mm256_cmp_pd(th, _mm256_setzero_pd(), _CMP_LT_OQ),
                                         _mm256_cmp_pd(th, set1(90.0), _CMP_GT_OQ));
        if (any(bad)) {
            // re-run the offending chunk through the scalar path for the
            // canonical error
            for (std::size_t k = i; k < i + 4; ++k) out[k] = p_los(theta_deg[k], env);
            continue;
        }
        const __m256d e = avx2m::exp_pd(_mm256_mul_pd(neg_b, _mm256_sub_pd(th, a)));
        const __m256d denom = _mm256_fmadd_pd(a, e, set1(1.0));
        _mm256_storeu_pd(out + i, _mm256_div_pd(set1(1.0), denom));
    }
    for (; i < n; ++i) out[i] = p_los(theta_deg[i], env);
}

void slant_elevation_avx2(const double* dx_m, const double* dy_m, double* dist_m,
                          double* theta_deg, std::size_t n, double altitude_m) {
    if (!(altitude_m > 0.0)) {
        // degenerate geometry; let the scalar path raise its errors
        const Backend& ref = scalar_backend();
        ref.slant_elevation(dx_m, dy_m, dist_m, theta_deg, n, altitude_m);
        return;
    }
    const __m256d h = set1(altitude_m);
    const __m256d h2 = set1(altitude_m * altitude_m);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_loadu_pd(dx_m + i);
        const __m256d dy = _mm256_loadu_pd(dy_m + i);
        const __m256d sq = _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, h2));
        const __m256d d = _mm256_sqrt_pd(sq);
        _mm256_storeu_pd(dist_m + i, d);
        const __m256d theta = avx2m::asin_pd(_mm256_div_pd(h, d));
        _mm256_storeu_pd(theta_deg + i, _mm256_mul_pd(theta, set1(kRadToDeg)));
    }
    const UavPose uav{0.0, 0.0, altitude_m};
    for (; i < n; ++i) {
        const GroundPoint user{dx_m[i], dy_m[i], 0.0};
        dist_m[i] = slant_distance(uav, user);
        theta_deg[i] = elevation_angle_deg(uav, user);
    }
}

void mean_path_loss_db_avx2(const double* dist_m, const double* plos, double* out_db,
                            std::size_t n, const PathLossParams& p, const Environment& env) {
    // Excess-loss factors match the scalar path bit-for-bit: same scalar
    // std::pow calls.
    const double l_los = std::pow(10.0, -env.eta_los_db / 10.0);
    const double l_nlos = std::pow(10.0, -env.eta_nlos_db / 10.0);
    const bool fspl = p.model == PathLossModel::fspl;
    const bool db_avg = p.averaging == GainAveraging::db;
    const double c4pif = 4.0 * std::numbers::pi * p.f_hz;

    const __m256d v_llos = set1(l_los);
    const __m256d v_lnlos = set1(l_nlos);
    const __m256d one = set1(1.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_loadu_pd(dist_m + i);
        if (any(_mm256_cmp_pd(d, _mm256_setzero_pd(), _CMP_LE_OQ))) {
            for (std::size_t k = i; k < i + 4; ++k) {
                out_db[k] = -10.0 * std::log10(mean_gain_at(dist_m[k], plos[k], p, env));
            }
            continue;
        }
        __m256d g;  // distance term of the gain
        if (fspl) {
            const __m256d amp = _mm256_div_pd(set1(kSpeedOfLight), _mm256_mul_pd(set1(c4pif), d));
            g = _mm256_mul_pd(amp, amp);
        } else {
            g = avx2m::exp_pd(_mm256_mul_pd(set1(-p.alpha), avx2m::log_pd(d)));
        }
        const __m256d pl = _mm256_loadu_pd(plos + i);
        const __m256d pn = _mm256_sub_pd(one, pl);
        const __m256d g_los = _mm256_mul_pd(g, v_llos);
        const __m256d g_nlos = _mm256_mul_pd(g, v_lnlos);
        __m256d loss;
        if (db_avg) {
            const __m256d db_los = _mm256_mul_pd(set1(10.0), avx2m::log10_pd(g_los));
            const __m256d db_nlos = _mm256_mul_pd(set1(10.0), avx2m::log10_pd(g_nlos));
            loss = _mm256_xor_pd(_mm256_fmadd_pd(pl, db_los, _mm256_mul_pd(pn, db_nlos)),
                                 set1(-0.0));
        } else {
            const __m256d mean = _mm256_fmadd_pd(pl, g_los, _mm256_mul_pd(pn, g_nlos));
            loss = _mm256_mul_pd(set1(-10.0), avx2m::log10_pd(mean));
        }
        _mm256_storeu_pd(out_db + i, loss);
    }
    for (; i < n; ++i) {
        out_db[i] = -10.0 * std::log10(mean_gain_at(dist_m[i], plos[i], p, env));
    }
}

void array_factor_avx2(const double* theta_deg, double* out, std::size_t n,
                       const ArrayConfig& cfg) {
    const double sin_phi = std::sin(cfg.phi_deg * kDegToRad);
    const double m = static_cast<double>(cfg.elements);
    const __m256d v_sinphi = set1(sin_phi);
    const __m256d v_m = set1(m);
    const __m256d window = set1(1e-12);
    const __m256d one = set1(1.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d th = _mm256_loadu_pd(theta_deg + i);
        const __m256d bad = _mm256_or_pd(_mm256_cmp_pd(th, set1(-90.0), _CMP_LT_OQ),
                                         _mm256_cmp_pd(th, set1(90.0), _CMP_GT_OQ));
        if (any(bad)) {
            for (std::size_t k = i; k < i + 4; ++k) out[k] = array_factor(theta_deg[k], cfg);
            continue;
        }
        const __m256d s_theta = avx2m::sin_pd(_mm256_mul_pd(th, set1(kDegToRad)));
        const __m256d delta = _mm256_sub_pd(s_theta, v_sinphi);

        const __m256d lobe = _mm256_mul_pd(
            _mm256_round_pd(_mm256_mul_pd(delta, set1(0.5)),
                            _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC),
            set1(2.0));
        const __m256d lobe_mask =
            _mm256_cmp_pd(abs_pd(_mm256_sub_pd(delta, lobe)), window, _CMP_LT_OQ);

        const __m256d khalf = _mm256_mul_pd(delta, set1(m * 0.5));
        const __m256d k = _mm256_round_pd(khalf, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        __m256d null_mask =
            _mm256_cmp_pd(abs_pd(_mm256_sub_pd(khalf, k)), window, _CMP_LT_OQ);
        null_mask = _mm256_and_pd(null_mask,
                                  _mm256_cmp_pd(k, _mm256_setzero_pd(), _CMP_NEQ_OQ));
        // |k| == m would be a lobe, not a null
        null_mask = _mm256_and_pd(null_mask, _mm256_cmp_pd(abs_pd(k), v_m, _CMP_NEQ_OQ));

        const __m256d u = _mm256_mul_pd(delta, set1(std::numbers::pi * 0.5));
        const __m256d num = avx2m::sin_pd(_mm256_mul_pd(u, v_m));
        const __m256d den = _mm256_mul_pd(v_m, avx2m::sin_pd(u));
        const __m256d ratio = _mm256_div_pd(num, den);
        __m256d af = _mm256_mul_pd(ratio, ratio);
        af = _mm256_max_pd(_mm256_min_pd(af, one), _mm256_setzero_pd());

        af = _mm256_blendv_pd(af, _mm256_setzero_pd(), null_mask);
        af = _mm256_blendv_pd(af, one, lobe_mask);
        _mm256_storeu_pd(out + i, af);
    }
    for (; i < n; ++i) out[i] = array_factor(theta_deg[i], cfg);
}

void shannon_rate_avx2(const double* snr_db, double* out_bps, std::size_t n,
                       double bandwidth_hz) {
    const __m256d b = set1(bandwidth_hz);
    const __m256d tenth = set1(0.1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(snr_db + i);
        const __m256d lin = avx2m::exp10_pd(_mm256_mul_pd(s, tenth));
        const __m256d rate =
            _mm256_mul_pd(b, avx2m::log2_pd(_mm256_add_pd(set1(1.0), lin)));
        _mm256_storeu_pd(out_bps + i, rate);
    }
    for (; i < n; ++i) out_bps[i] = shannon_rate_bps(snr_db[i], bandwidth_hz);
}

}  // namespace

const Backend& avx2_backend_impl() {
    static const Backend backend{
        "avx2",
        plos_avx2,
        slant_elevation_avx2,
        mean_path_loss_db_avx2,
        array_factor_avx2,
        shannon_rate_avx2,
    };
    return backend;
}

}  // namespace a2g::kernels::detail
