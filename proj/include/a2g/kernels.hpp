#pragma once

#include <cstddef>
#include <string_view>

#include "a2g/beamforming.hpp"
#include "a2g/channel.hpp"
#include "a2g/environment.hpp"

namespace a2g::kernels {

// Batch kernels behind the sweep and coverage engines.
//
// Every kernel fills out[i] as a pure function of the i-th inputs. The
// scalar backend is the reference: it calls the per-point module functions
// one element at a time. SIMD backends must agree with it within the
// tolerances pinned by the backend-equivalence tests (see tests/).
struct Backend {
    const char* name;
    void (*plos)(const double* theta_deg, double* out, std::size_t n, const Environment& env);
    void (*slant_elevation)(const double* dx_m, const double* dy_m, double* dist_m,
                            double* theta_deg, std::size_t n, double altitude_m);
    void (*mean_path_loss_db)(const double* dist_m, const double* plos, double* out_db,
                              std::size_t n, const PathLossParams& p, const Environment& env);
    void (*array_factor)(const double* theta_deg, double* out, std::size_t n,
                         const ArrayConfig& cfg);
    void (*shannon_rate)(const double* snr_db, double* out_bps, std::size_t n,
                         double bandwidth_hz);
};

// Reference backend, always available.
const Backend& scalar_backend();

// AVX2+FMA backend, or nullptr when the build target or the host CPU lacks
// the instructions.
const Backend* avx2_backend();

// Backend used by the engines: the best available one, unless overridden by
// select() or the A2GSIM_KERNELS environment variable ("auto" | "scalar" |
// "avx2"). Selection happens once per process and is deterministic on a
// given host, so repeated runs use identical code paths.
const Backend& active();

// Force a backend by name. Throws ConfigError for unknown names or for a
// backend unavailable on this host.
void select(std::string_view name);

}  // namespace a2g::kernels
