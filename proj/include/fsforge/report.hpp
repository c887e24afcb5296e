#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsforge/field.hpp"

namespace fsforge {

// Outcome of an equational check. The witness is the lexicographically first
// violation in scan order: the index tuple (1-based, matching the usual
// superscript/subscript notation) and the two values that were found unequal.
struct CheckReport {
    struct Witness {
        std::vector<int> index;
        Scalar lhs, rhs;
    };
    bool passed = false;
    std::optional<Witness> witness;

    static CheckReport pass() { return CheckReport{true, std::nullopt}; }
    static CheckReport fail(std::vector<int> index, Scalar lhs, Scalar rhs) {
        return CheckReport{false, Witness{std::move(index), std::move(lhs), std::move(rhs)}};
    }
};

}  // namespace fsforge
