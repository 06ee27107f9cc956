#include "pltr/volume.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace pltr {

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

SlotSet make_slot_set(std::vector<int> slots) {
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
    return slots;
}

SlotSet full_slot_set(int horizon_size) {
    SlotSet q(static_cast<std::size_t>(std::max(0, horizon_size)));
    std::iota(q.begin(), q.end(), 0);
    return q;
}

namespace {

/// |E_j n Q| for sorted Q.
long long window_intersection(const Job& job, const SlotSet& q) {
    auto lo = std::lower_bound(q.begin(), q.end(), job.release);
    auto hi = std::upper_bound(q.begin(), q.end(), job.deadline);
    return hi - lo;
}

}  // namespace

long long forced_volume(const Job& job, const SlotSet& q) {
    long long outside = job.window() - window_intersection(job, q);
    return std::max<long long>(0, job.volume - outside);
}

long long forced_volume(const Instance& instance, const SlotSet& q) {
    long long total = 0;
    for (const auto& job : instance.jobs) total += forced_volume(job, q);
    return total;
}

long long possible_volume(const Job& job, const SlotSet& q) {
    return std::min<long long>(job.volume, window_intersection(job, q));
}

long long possible_volume(const Instance& instance, const SlotSet& q) {
    long long total = 0;
    for (const auto& job : instance.jobs) total += possible_volume(job, q);
    return total;
}

long long scheduled_volume(const Schedule& schedule,
                           const std::optional<std::set<std::string>>& jobs,
                           const SlotSet& q) {
    long long total = 0;
    for (int t : q) {
        if (t < 0 || t >= schedule.horizon) continue;
        for (const auto& [k, job] : schedule.slots[static_cast<std::size_t>(t)])
            if (!jobs || jobs->count(job) > 0) ++total;
    }
    return total;
}

long long unnecessary_volume(const Schedule& schedule, const Job& job,
                             const SlotSet& q) {
    return scheduled_volume(schedule, std::set<std::string>{job.id}, q) -
           forced_volume(job, q);
}

Rational density(const Instance& instance, const SlotSet& q) {
    if (q.empty()) throw Error("undefined density");
    return Rational::of(forced_volume(instance, q),
                        static_cast<long long>(q.size()));
}

Rational peak_density(const Instance& instance, const SlotSet& q, int cap) {
    if (static_cast<int>(q.size()) > cap) throw Error("peak density cap");
    // fv over a subset only needs |E_j n Q'|; precompute per-job membership
    // masks over the elements of Q so each subset costs one popcount per job.
    std::vector<std::uint64_t> job_masks;
    for (const auto& job : instance.jobs) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (job.covers(q[i])) mask |= std::uint64_t{1} << i;
        job_masks.push_back(mask);
    }
    Rational best = Rational::of(0, 1);
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << q.size()); ++sub) {
        long long fv = 0;
        for (std::size_t j = 0; j < job_masks.size(); ++j) {
            const Job& job = instance.jobs[j];
            long long outside =
                job.window() - std::popcount(job_masks[j] & sub);
            fv += std::max<long long>(0, job.volume - outside);
        }
        Rational phi = Rational::of(fv, std::popcount(sub));
        if (best < phi) best = phi;
    }
    return best;
}

long long deficiency(const Instance& instance, const BoundProfile& bounds,
                     const SlotSet& q) {
    long long capacity = 0;
    for (int t : q) capacity += bounds.upper_at(t);
    return forced_volume(instance, q) - capacity;
}

long long excess(const Instance& instance, const BoundProfile& bounds,
                 const SlotSet& q) {
    long long required = 0;
    for (int t : q) required += bounds.lower_at(t);
    return required - possible_volume(instance, q);
}

EnumerationResult feasible_by_enumeration(const Instance& instance,
                                          const BoundProfile& bounds,
                                          int cap) {
    int horizon_size = bounds.end();
    if (horizon_size > cap) throw Error("enumeration cap exceeded");

    std::vector<std::uint64_t> job_masks;
    for (const auto& job : instance.jobs) {
        std::uint64_t mask = 0;
        for (int t = 0; t < horizon_size; ++t)
            if (job.covers(t)) mask |= std::uint64_t{1} << t;
        job_masks.push_back(mask);
    }
    std::vector<int> lower(static_cast<std::size_t>(horizon_size));
    std::vector<int> upper(static_cast<std::size_t>(horizon_size));
    for (int t = 0; t < horizon_size; ++t) {
        lower[static_cast<std::size_t>(t)] = bounds.lower_at(t);
        upper[static_cast<std::size_t>(t)] = bounds.upper_at(t);
    }

    auto expand = [&](std::uint64_t mask) {
        SlotSet q;
        for (int t = 0; t < horizon_size; ++t)
            if (mask & (std::uint64_t{1} << t)) q.push_back(t);
        return q;
    };

    // Largest sets first so the trivial witnesses (whole horizon) surface
    // before their subsets.
    std::uint64_t all = horizon_size >= 64
                            ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << horizon_size) - 1;
    for (std::uint64_t mask = all;; --mask) {
        long long fv = 0;
        long long pv = 0;
        for (std::size_t j = 0; j < job_masks.size(); ++j) {
            const Job& job = instance.jobs[j];
            long long inside = std::popcount(job_masks[j] & mask);
            fv += std::max<long long>(0, job.volume - (job.window() - inside));
            pv += std::min<long long>(job.volume, inside);
        }
        long long cap_sum = 0;
        long long req_sum = 0;
        for (int t = 0; t < horizon_size; ++t) {
            if (mask & (std::uint64_t{1} << t)) {
                cap_sum += upper[static_cast<std::size_t>(t)];
                req_sum += lower[static_cast<std::size_t>(t)];
            }
        }
        if (fv - cap_sum > 0 || req_sum - pv > 0)
            return {false, expand(mask)};
        if (mask == 0) break;
    }
    return {true, std::nullopt};
}

}  // namespace pltr
