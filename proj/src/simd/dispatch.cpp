#include <lonet/simd/kernels.hpp>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lonet::simd {

namespace {

Backend detect() {
    const char* forced = std::getenv("LONET_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") {
        return Backend::scalar;
    }
    return supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

} // namespace

std::string_view toString(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

bool supported(Backend backend) {
    if (backend == Backend::scalar) {
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    return detail::avx2Compiled() && __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend activeBackend() { return current().load(std::memory_order_relaxed); }

void setBackend(Backend backend) {
    if (!supported(backend)) {
        throw std::invalid_argument("SIMD backend " + std::string(toString(backend)) +
                                    " is not supported on this CPU");
    }
    current().store(backend, std::memory_order_relaxed);
}

bool fitsInt32(int n, std::int64_t maxDistance, std::int64_t maxFlow) {
    if (maxDistance < 0 || maxFlow < 0) {
        return false;
    }
    if (maxDistance > (1LL << 31) || maxFlow > (1LL << 31)) {
        return false;
    }
    const std::int64_t limit = (std::int64_t{1} << 31) - 1;
    const std::int64_t partial = static_cast<std::int64_t>(n) * n * maxDistance;
    return maxFlow == 0 || partial <= limit / maxFlow;
}

void nkFitnessRange(const NkTablesView& nk, std::uint64_t first, std::span<double> out) {
    if (activeBackend() == Backend::avx2) {
        detail::nkFitnessRangeAvx2(nk, first, out);
    } else {
        detail::nkFitnessRangeScalar(nk, first, out);
    }
}

void bestFlipSuccessors(std::span<const double> scores, int n, std::uint64_t first,
                        std::span<std::uint32_t> out) {
    if (activeBackend() == Backend::avx2) {
        detail::bestFlipSuccessorsAvx2(scores, n, first, out);
    } else {
        detail::bestFlipSuccessorsScalar(scores, n, first, out);
    }
}

std::int64_t qapCost(const QapMatricesView& qap, const std::int32_t* perm) {
    if (activeBackend() == Backend::avx2) {
        return detail::qapCostAvx2(qap, perm);
    }
    return detail::qapCostScalar(qap, perm);
}

} // namespace lonet::simd
