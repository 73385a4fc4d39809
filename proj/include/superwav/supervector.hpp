#pragma once

#include <vector>

#include "superwav/cycles.hpp"
#include "superwav/numerics.hpp"

namespace superwav {

// A tuple of sampled functions over a cycle system, one per cycle point,
// ordered (cycle 1 point 1, ..., cycle 1 point p1, cycle 2 point 1, ...).
class SuperVector {
public:
    SuperVector(CycleSystem system, std::vector<SampledFunction> components);

    const CycleSystem& system() const { return system_; }
    const std::vector<SampledFunction>& components() const { return components_; }
    std::int64_t size() const { return static_cast<std::int64_t>(components_.size()); }
    const SampledFunction& component(std::int64_t idx) const {
        return components_[static_cast<std::size_t>(idx)];
    }
    const SampledFunction& component(std::int64_t cycle, std::int64_t point) const {
        return components_[static_cast<std::size_t>(system_.flat_index(cycle, point))];
    }

    double norm_sq() const;
    double norm() const;

    SuperVector scaled(cdouble factor) const;
    SuperVector operator+(const SuperVector& other) const;
    SuperVector operator-(const SuperVector& other) const;

private:
    CycleSystem system_;
    std::vector<SampledFunction> components_;
};

// Direct-sum inner product; structural error on mismatched cycle systems.
cdouble super_inner_product(const SuperVector& u, const SuperVector& v);

}  // namespace superwav
