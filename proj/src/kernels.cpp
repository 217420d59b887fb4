#include "a2g/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g::kernels {

#if defined(A2G_HAVE_AVX2)
namespace detail {
const Backend& avx2_backend_impl();
}
#endif

const Backend* avx2_backend() {
#if defined(A2G_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return &detail::avx2_backend_impl();
    }
#endif
    return nullptr;
}

namespace {

std::atomic<const Backend*> g_active{nullptr};

const Backend* resolve(std::string_view name) {
    if (name == "scalar") return &scalar_backend();
    if (name == "avx2") {
        const Backend* b = avx2_backend();
        if (b == nullptr) {
            throw ConfigError("kernel backend 'avx2' is not available on this host");
        }
        return b;
    }
    if (name == "auto") {
        const Backend* b = avx2_backend();
        return b != nullptr ? b : &scalar_backend();
    }
    std::ostringstream msg;
    msg << "unknown kernel backend '" << name << "'; valid: auto scalar avx2";
    throw ConfigError(msg.str());
}

}  // namespace

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (b == nullptr) {
        const char* env = std::getenv("A2GSIM_KERNELS");
        b = resolve(env != nullptr ? env : "auto");
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

void select(std::string_view name) {
    g_active.store(resolve(name), std::memory_order_release);
}

}  // namespace a2g::kernels
