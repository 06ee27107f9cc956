#pragma once

#include <random>
#include <string>
#include <vector>

#include "pltr/model.hpp"

namespace testutil {

inline pltr::Instance fixture_a() {
    pltr::Instance instance;
    instance.m = 1;
    instance.q = 2;
    instance.jobs = {{"j1", 0, 4, 2}};
    return instance;
}

inline pltr::Instance fixture_b() {
    pltr::Instance instance;
    instance.m = 2;
    instance.q = 1;
    instance.jobs = {{"j1", 0, 1, 2}, {"j2", 0, 1, 2}};
    return instance;
}

inline pltr::Instance fixture_inf() {
    pltr::Instance instance;
    instance.m = 1;
    instance.q = 0;
    instance.jobs = {{"j1", 0, 1, 3}};
    return instance;
}

inline pltr::BoundProfile default_bounds(const pltr::Instance& instance) {
    return pltr::BoundProfile::uniform(instance.horizon_size(), 0, instance.m);
}

/// Random well-formed instance: windows built around volumes.
inline pltr::Instance random_instance(std::mt19937_64& rng, int max_n, int max_d,
                                      int max_m, long long q) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    std::uniform_int_distribution<int> m_dist(1, max_m);
    pltr::Instance instance;
    instance.m = m_dist(rng);
    instance.q = q;
    int n = n_dist(rng);
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> len_dist(1, max_d + 1);
        int window = len_dist(rng);
        std::uniform_int_distribution<int> rel_dist(0, max_d + 1 - window);
        std::uniform_int_distribution<int> vol_dist(1, window);
        pltr::Job job;
        job.id = "j" + std::to_string(i + 1);
        job.release = rel_dist(rng);
        job.deadline = job.release + window - 1;
        job.volume = vol_dist(rng);
        instance.jobs.push_back(job);
    }
    instance.normalize();
    return instance;
}

/// Random monotone-consistent bound profile over [0, end).
inline pltr::BoundProfile random_bounds(std::mt19937_64& rng, int end, int m) {
    pltr::BoundProfile bounds = pltr::BoundProfile::uniform(end, 0, m);
    std::uniform_int_distribution<int> slot(0, end - 1);
    std::uniform_int_distribution<int> tweaks(0, 3);
    int k = tweaks(rng);
    for (int i = 0; i < k; ++i) {
        int a = slot(rng);
        int b = slot(rng);
        if (a > b) std::swap(a, b);
        if (tweaks(rng) % 2 == 0) {
            // keep u >= l after the clamp
            int ceiling = 0;
            for (int t = a; t <= b; ++t) ceiling = std::max(ceiling, bounds.lower_at(t));
            std::uniform_int_distribution<int> level(ceiling, m);
            bounds.clamp_upper(a, b + 1, level(rng));
        } else {
            // keep l <= u after the raise
            int floor = m;
            for (int t = a; t <= b; ++t) floor = std::min(floor, bounds.upper_at(t));
            std::uniform_int_distribution<int> lower(0, floor);
            bounds.raise_lower(a, b + 1, lower(rng));
        }
    }
    return bounds;
}

}  // namespace testutil
