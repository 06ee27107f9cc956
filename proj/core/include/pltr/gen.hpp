#pragma once

#include <cstdint>
#include <random>

#include "pltr/model.hpp"

namespace pltr {

/// Random instance parameters. Jobs are built window-first around their
/// volume, so p_j <= |E_j| always holds; infeasibility (roughly 10% with
/// the defaults) comes from contention across jobs, which exercises the
/// certificate paths.
struct GenSpec {
    int n = 4;
    int m = 2;
    Energy q = 2;
    int horizon = 8;        // last usable slot index d
    int volume_min = 1;
    int volume_max = 3;
    int slack_min = 0;
    int slack_max = 3;
    std::uint64_t seed = 1;
};

Instance generate(const GenSpec& spec, std::mt19937_64& rng);
Instance generate(const GenSpec& spec);

}  // namespace pltr
