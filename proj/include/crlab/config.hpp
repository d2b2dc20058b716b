#pragma once

#include <cstdint>

namespace crlab {

namespace config {

// CRLAB_MAX_ENUM: ceiling on exhaustive enumeration sizes (default 10,000,000).
long long max_enum();

// CRLAB_THREADS: worker count for partitioned enumerations
// (default: machine parallelism).
int threads();

// CRLAB_SEED: seed for sampling modes (default 0).
std::uint64_t seed();

} // namespace config

// Budget passed to enumeration-backed operations.  Default-constructed
// instances pick up the environment configuration.
struct EnumOptions {
    long long cap;
    int threads;
    EnumOptions();
    EnumOptions(long long cap_, int threads_) : cap(cap_), threads(threads_) {}
};

} // namespace crlab
