#include "pltr/gen.hpp"

#include <algorithm>

namespace pltr {

Instance generate(const GenSpec& spec, std::mt19937_64& rng) {
    Instance instance;
    instance.m = spec.m;
    instance.q = spec.q;

    std::uniform_int_distribution<int> volume(spec.volume_min, spec.volume_max);
    std::uniform_int_distribution<int> slack(spec.slack_min, spec.slack_max);

    for (int i = 0; i < spec.n; ++i) {
        Job job;
        job.id = "j" + std::to_string(i + 1);
        job.volume = std::min(volume(rng), spec.horizon + 1);
        int window = std::min(job.volume + slack(rng), spec.horizon + 1);
        std::uniform_int_distribution<int> release(0, spec.horizon + 1 - window);
        job.release = release(rng);
        job.deadline = job.release + window - 1;
        instance.jobs.push_back(std::move(job));
    }
    instance.normalize();
    return instance;
}

Instance generate(const GenSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return generate(spec, rng);
}

}  // namespace pltr
