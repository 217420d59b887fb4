#pragma once

// Double-precision exp/log/sin/asin on __m256d lanes, Cephes-derived
// polynomial evaluations. Accuracy is a few ulp over the argument ranges
// the kernels feed them (angles within +/-90 deg scaled by element counts,
// distances, SNRs); the kernel equivalence tests pin the resulting
// end-to-end tolerances against the scalar backend.
//
// Only compiled into the AVX2 translation unit.

#include <immintrin.h>

#include <limits>

namespace a2g::avx2m {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// 2^n for integral-valued n lanes within [-1022, 1023].
inline __m256d pow2i(__m256d n) {
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i bits =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    return _mm256_castsi256_pd(bits);
}

// Integral-valued int64 lanes (|v| < 2^51) to double.
inline __m256d small_i64_to_pd(__m256i v) {
    const __m256d shift = set1(6755399441055744.0);  // 2^52 + 2^51
    const __m256i x = _mm256_add_epi64(v, _mm256_castpd_si256(shift));
    return _mm256_sub_pd(_mm256_castsi256_pd(x), shift);
}

inline __m256d exp_pd(__m256d x) {
    const __m256d n = _mm256_floor_pd(
        _mm256_fmadd_pd(set1(1.4426950408889634073599), x, set1(0.5)));
    // r = x - n*ln2, split reduction
    __m256d r = _mm256_fnmadd_pd(n, set1(6.93145751953125e-1), x);
    r = _mm256_fnmadd_pd(n, set1(1.42860682030941723212e-6), r);
    const __m256d rr = _mm256_mul_pd(r, r);

    __m256d p = set1(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, rr, set1(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, rr, set1(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);

    __m256d q = set1(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, rr, set1(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, rr, set1(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, rr, set1(2.00000000000000000005e0));

    __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(set1(2.0), e, set1(1.0));
    e = _mm256_mul_pd(e, pow2i(n));

    // Saturate outside the representable range (covers +/-inf inputs).
    const __m256d lo = _mm256_cmp_pd(x, set1(-708.0), _CMP_LT_OS);
    const __m256d hi = _mm256_cmp_pd(x, set1(709.0), _CMP_GT_OS);
    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), lo);
    e = _mm256_blendv_pd(e, set1(std::numeric_limits<double>::infinity()), hi);
    return e;
}

// Natural log for strictly positive normal inputs.
inline __m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_bits =
        _mm256_srli_epi64(_mm256_and_si256(bits, _mm256_set1_epi64x(0x7ff0000000000000LL)), 52);
    __m256d e = _mm256_sub_pd(small_i64_to_pd(exp_bits), set1(1022.0));
    // mantissa in [0.5, 1)
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
        _mm256_set1_epi64x(0x3fe0000000000000LL)));

    const __m256d below = _mm256_cmp_pd(m, set1(0.70710678118654752440), _CMP_LT_OS);
    e = _mm256_sub_pd(e, _mm256_and_pd(below, set1(1.0)));
    // x - 1, doubling the mantissa first in the lower half
    m = _mm256_sub_pd(_mm256_add_pd(m, _mm256_and_pd(below, m)), set1(1.0));

    const __m256d z = _mm256_mul_pd(m, m);

    __m256d p = set1(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, m, set1(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, m, set1(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, m, set1(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, m, set1(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, m, set1(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(m, set1(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, m, set1(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, m, set1(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, m, set1(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, m, set1(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(m, _mm256_div_pd(_mm256_mul_pd(z, p), q));
    y = _mm256_fnmadd_pd(e, set1(2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(set1(0.5), z, y);
    __m256d r = _mm256_add_pd(m, y);
    r = _mm256_fmadd_pd(e, set1(0.693359375), r);
    return r;
}

inline __m256d log10_pd(__m256d x) {
    return _mm256_mul_pd(log_pd(x), set1(0.43429448190325182765));
}

inline __m256d log2_pd(__m256d x) {
    return _mm256_mul_pd(log_pd(x), set1(1.4426950408889634074));
}

// 10^x
inline __m256d exp10_pd(__m256d x) {
    return exp_pd(_mm256_mul_pd(x, set1(2.30258509299404568402)));
}

inline __m256d sin_pd(__m256d x) {
    const __m256d sign_in = _mm256_and_pd(x, set1(-0.0));
    const __m256d a = _mm256_andnot_pd(set1(-0.0), x);

    // octant of pi/4
    __m256d y = _mm256_floor_pd(_mm256_mul_pd(a, set1(1.27323954473516268615)));
    __m256d j = _mm256_sub_pd(
        y, _mm256_mul_pd(set1(8.0), _mm256_floor_pd(_mm256_mul_pd(y, set1(0.125)))));
    // map odd octants up
    const __m256d parity =
        _mm256_sub_pd(j, _mm256_mul_pd(set1(2.0), _mm256_floor_pd(_mm256_mul_pd(j, set1(0.5)))));
    j = _mm256_add_pd(j, parity);
    y = _mm256_add_pd(y, parity);
    j = _mm256_sub_pd(
        j, _mm256_mul_pd(set1(8.0), _mm256_floor_pd(_mm256_mul_pd(j, set1(0.125)))));

    const __m256d flip = _mm256_cmp_pd(j, set1(3.0), _CMP_GT_OS);
    j = _mm256_sub_pd(j, _mm256_and_pd(flip, set1(4.0)));

    // extended-precision argument reduction
    __m256d z = _mm256_fnmadd_pd(y, set1(7.85398125648498535156e-1), a);
    z = _mm256_fnmadd_pd(y, set1(3.77489470793079817668e-8), z);
    z = _mm256_fnmadd_pd(y, set1(2.69515142907905952645e-15), z);
    const __m256d zz = _mm256_mul_pd(z, z);

    __m256d ps = set1(1.58962301576546568060e-10);
    ps = _mm256_fmadd_pd(ps, zz, set1(-2.50507477628578072866e-8));
    ps = _mm256_fmadd_pd(ps, zz, set1(2.75573136213857245213e-6));
    ps = _mm256_fmadd_pd(ps, zz, set1(-1.98412698295895385996e-4));
    ps = _mm256_fmadd_pd(ps, zz, set1(8.33333333332211858878e-3));
    ps = _mm256_fmadd_pd(ps, zz, set1(-1.66666666666666307295e-1));
    const __m256d sin_poly =
        _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

    __m256d pc = set1(-1.13585365213876817300e-11);
    pc = _mm256_fmadd_pd(pc, zz, set1(2.08757008419747316778e-9));
    pc = _mm256_fmadd_pd(pc, zz, set1(-2.75573141792967388112e-7));
    pc = _mm256_fmadd_pd(pc, zz, set1(2.48015872888517179954e-5));
    pc = _mm256_fmadd_pd(pc, zz, set1(-1.38888888888730564116e-3));
    pc = _mm256_fmadd_pd(pc, zz, set1(4.16666666666665929218e-2));
    __m256d cos_poly = _mm256_mul_pd(_mm256_mul_pd(zz, zz), pc);
    cos_poly = _mm256_fnmadd_pd(set1(0.5), zz, _mm256_add_pd(set1(1.0), cos_poly));

    const __m256d use_cos = _mm256_and_pd(_mm256_cmp_pd(j, set1(0.5), _CMP_GT_OS),
                                          _mm256_cmp_pd(j, set1(2.5), _CMP_LT_OS));
    __m256d r = _mm256_blendv_pd(sin_poly, cos_poly, use_cos);

    const __m256d sign = _mm256_xor_pd(sign_in, _mm256_and_pd(flip, set1(-0.0)));
    return _mm256_xor_pd(r, sign);
}

inline __m256d asin_pd(__m256d x) {
    const __m256d sign_in = _mm256_and_pd(x, set1(-0.0));
    const __m256d a = _mm256_andnot_pd(set1(-0.0), x);

    // |x| > 0.625 branch
    const __m256d zz_big = _mm256_sub_pd(set1(1.0), a);
    __m256d rp = set1(2.967721961301243206100e-3);
    rp = _mm256_fmadd_pd(rp, zz_big, set1(-5.634242780008963776856e-1));
    rp = _mm256_fmadd_pd(rp, zz_big, set1(6.968710824104713396794e0));
    rp = _mm256_fmadd_pd(rp, zz_big, set1(-2.556901049652824852289e1));
    rp = _mm256_fmadd_pd(rp, zz_big, set1(2.853665548261061424989e1));
    rp = _mm256_mul_pd(rp, zz_big);

    __m256d sp = _mm256_add_pd(zz_big, set1(-2.194779531642920639778e1));
    sp = _mm256_fmadd_pd(sp, zz_big, set1(1.470656354026814941758e2));
    sp = _mm256_fmadd_pd(sp, zz_big, set1(-3.838770957603691357202e2));
    sp = _mm256_fmadd_pd(sp, zz_big, set1(3.424398657913078477438e2));

    const __m256d p_big = _mm256_div_pd(rp, sp);
    const __m256d s = _mm256_sqrt_pd(_mm256_add_pd(zz_big, zz_big));
    const __m256d pio4 = set1(7.85398163397448309616e-1);
    __m256d big = _mm256_sub_pd(pio4, s);
    const __m256d corr =
        _mm256_fmsub_pd(s, p_big, set1(6.123233995736765886130e-17));
    big = _mm256_add_pd(_mm256_sub_pd(big, corr), pio4);

    // |x| <= 0.625: asin(x) = x + x*z*P(z) with z = x^2; near-minimax fit of
    // (asin(sqrt(z))/sqrt(z) - 1)/z on [0, 0.390625], ~1 ulp in double
    const __m256d zz = _mm256_mul_pd(a, a);
    __m256d pp = set1(0.12470531521889347);
    pp = _mm256_fmadd_pd(pp, zz, set1(-0.2551267869027215));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.27711894881380306));
    pp = _mm256_fmadd_pd(pp, zz, set1(-0.16972809201333308));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.08300026782235391));
    pp = _mm256_fmadd_pd(pp, zz, set1(-0.016295179177676672));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.013643987994443278));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.00891298959782108));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.011650707985122282));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.013956670213442438));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.017353228631269934));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.022372141861767173));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.030381944829662354));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.04464285713834919));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.07500000000002079));
    pp = _mm256_fmadd_pd(pp, zz, set1(0.16666666666666666));
    __m256d small = _mm256_fmadd_pd(a, _mm256_mul_pd(zz, pp), a);

    const __m256d use_big = _mm256_cmp_pd(a, set1(0.625), _CMP_GT_OS);
    const __m256d r = _mm256_blendv_pd(small, big, use_big);
    return _mm256_xor_pd(r, sign_in);
}

}  // namespace a2g::avx2m
