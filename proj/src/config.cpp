#include "crlab/config.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "crlab/parallel.hpp"

namespace crlab {

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

} // namespace

namespace config {

long long max_enum() {
    long long v = env_ll("CRLAB_MAX_ENUM", 10'000'000LL);
    return v > 0 ? v : 10'000'000LL;
}

int threads() { return static_cast<int>(env_ll("CRLAB_THREADS", 0)); }

std::uint64_t seed() { return static_cast<std::uint64_t>(env_ll("CRLAB_SEED", 0)); }

} // namespace config

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

EnumOptions::EnumOptions() : cap(config::max_enum()), threads(config::threads()) {}

} // namespace crlab
