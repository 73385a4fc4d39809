#pragma once

#include <string>

namespace superwav {

// Result of a check: never an exception, always carries the worst measured
// violation and the tolerance it was judged against.
struct Verdict {
    bool passed = false;
    double deviation = 0.0;  // worst violation magnitude
    double tolerance = 0.0;
    std::string detail;

    static Verdict pass(double dev, double tol, std::string detail = "") {
        return {true, dev, tol, std::move(detail)};
    }
    static Verdict fail(double dev, double tol, std::string detail = "") {
        return {false, dev, tol, std::move(detail)};
    }
};

}  // namespace superwav
