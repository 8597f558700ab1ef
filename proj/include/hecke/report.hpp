#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

/// One evaluated identity.  A failing check carries expected/actual text.
struct CheckResult {
    std::string check;
    std::string instance;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> results;
    /// Non-empty when the suite was gated off; it then has no results.
    std::string skipped;

    std::size_t total() const { return results.size(); }
    std::size_t passed() const {
        std::size_t p = 0;
        for (const auto& r : results) p += r.pass ? 1 : 0;
        return p;
    }
    bool ok() const { return passed() == total(); }
};

inline CheckResult scalar_check(std::string check, std::string instance, const Scalar& expected, const Scalar& actual) {
    bool pass = expected == actual;
    return {std::move(check), std::move(instance), pass, to_string(expected), to_string(actual)};
}

/// First differing entry of two elements, or "" when equal.
inline std::string element_difference(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    for (std::size_t b = 0; b < lhs.num_blocks(); ++b) {
        const auto& x = lhs.block(b);
        const auto& y = rhs.block(b);
        for (int i = 0; i < x.dim(); ++i)
            for (int j = 0; j < x.dim(); ++j)
                if (x(i, j) != y(i, j))
                    return "block " + std::to_string(b) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                           "): " + to_string(x(i, j)) + " vs " + to_string(y(i, j));
    }
    return {};
}

inline CheckResult element_check(std::string check, std::string instance, const AlgebraElement& expected,
                                 const AlgebraElement& actual) {
    auto diff = element_difference(expected, actual);
    if (diff.empty()) return {std::move(check), std::move(instance), true, "equal", "equal"};
    return {std::move(check), std::move(instance), false, "equal elements", diff};
}

inline CheckResult zero_check(std::string check, std::string instance, const AlgebraElement& x) {
    if (x.is_zero()) return {std::move(check), std::move(instance), true, "0", "0"};
    return {std::move(check), std::move(instance), false, "0",
            std::to_string(x.support_size()) + " nonzero entries"};
}

inline CheckResult bool_check(std::string check, std::string instance, bool pass, std::string expected,
                              std::string actual) {
    return {std::move(check), std::move(instance), pass, std::move(expected), std::move(actual)};
}

}  // namespace hecke
