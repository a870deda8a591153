// support.hpp - shared helpers for the test suites

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qid/matrix.hpp"
#include "qid/random.hpp"

namespace qid::test {

inline bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

inline bool contains_close(const std::vector<double>& v, double x, double tol) {
    for (double y : v)
        if (std::abs(y - x) <= tol) return true;
    return false;
}

// Indices of local maxima of a sampled curve, ignoring float noise on plateaus.
inline std::vector<std::size_t> local_maxima(const std::vector<double>& y,
                                             double eps = 1e-9) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] + eps && y[i] > y[i + 1] + eps) idx.push_back(i);
    return idx;
}

} // namespace qid::test
