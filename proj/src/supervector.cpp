#include "superwav/supervector.hpp"

#include <cmath>

namespace superwav {

SuperVector::SuperVector(CycleSystem system, std::vector<SampledFunction> components)
    : system_(std::move(system)), components_(std::move(components)) {
    if (static_cast<std::int64_t>(components_.size()) != system_.point_count())
        throw structural_error("SuperVector: one component per cycle point required");
}

double SuperVector::norm_sq() const {
    double s = 0.0;
    for (const auto& c : components_) s += c.norm_sq();
    return s;
}

double SuperVector::norm() const { return std::sqrt(norm_sq()); }

SuperVector SuperVector::scaled(cdouble factor) const {
    std::vector<SampledFunction> v;
    v.reserve(components_.size());
    for (const auto& c : components_) v.push_back(c.scaled(factor));
    return SuperVector(system_, std::move(v));
}

SuperVector SuperVector::operator+(const SuperVector& other) const {
    if (system_ != other.system_) throw structural_error("SuperVector: system mismatch");
    std::vector<SampledFunction> v;
    v.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        v.push_back(components_[i] + other.components_[i]);
    return SuperVector(system_, std::move(v));
}

SuperVector SuperVector::operator-(const SuperVector& other) const {
    if (system_ != other.system_) throw structural_error("SuperVector: system mismatch");
    std::vector<SampledFunction> v;
    v.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        v.push_back(components_[i] - other.components_[i]);
    return SuperVector(system_, std::move(v));
}

cdouble super_inner_product(const SuperVector& u, const SuperVector& v) {
    if (u.system() != v.system())
        throw structural_error("super_inner_product: mismatched cycle systems");
    cdouble s = 0.0;
    for (std::int64_t i = 0; i < u.size(); ++i)
        s += inner_product(u.component(i), v.component(i));
    return s;
}

}  // namespace superwav
