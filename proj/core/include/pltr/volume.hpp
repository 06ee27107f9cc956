#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pltr/model.hpp"

namespace pltr {

/// Exact rational, reduced, positive denominator. All quantities in the
/// cost model are integers, so comparisons stay exact.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

/// Sorted duplicate-free set of slot indices.
using SlotSet = std::vector<int>;

SlotSet make_slot_set(std::vector<int> slots);
SlotSet full_slot_set(int horizon_size);

/// fv(j, Q) = max(0, p_j - |E_j \ Q|): work of j that every feasible
/// schedule must place inside Q.
long long forced_volume(const Job& job, const SlotSet& q);
long long forced_volume(const Instance& instance, const SlotSet& q);

/// pv(j, Q) = min(p_j, |E_j n Q|): maximum work of j placeable in Q.
long long possible_volume(const Job& job, const SlotSet& q);
long long possible_volume(const Instance& instance, const SlotSet& q);

/// Placements of the given jobs (all when filter is empty) inside Q.
long long scheduled_volume(const Schedule& schedule,
                           const std::optional<std::set<std::string>>& jobs,
                           const SlotSet& q);

long long unnecessary_volume(const Schedule& schedule, const Job& job,
                             const SlotSet& q);

/// phi(Q) = fv(J, Q) / |Q|. Throws on empty Q.
Rational density(const Instance& instance, const SlotSet& q);

/// max over nonempty Q' subseteq Q of phi(Q'). Exponential; capped.
Rational peak_density(const Instance& instance, const SlotSet& q, int cap = 20);

/// def(Q) = fv(J, Q) - sum_{t in Q} m_t; positive means infeasible.
long long deficiency(const Instance& instance, const BoundProfile& bounds,
                     const SlotSet& q);

/// exc(Q) = sum_{t in Q} l_t - pv(J, Q); positive means infeasible.
long long excess(const Instance& instance, const BoundProfile& bounds,
                 const SlotSet& q);

struct EnumerationResult {
    bool feasible = false;
    std::optional<SlotSet> witness;
};

/// Exhaustive feasibility oracle: feasible iff def(Q) <= 0 and
/// exc(Q) <= 0 for every Q subseteq T. Enumerates subsets from the full
/// horizon downwards; exponential, capped at `cap` slots.
EnumerationResult feasible_by_enumeration(const Instance& instance,
                                          const BoundProfile& bounds,
                                          int cap = 16);

}  // namespace pltr
