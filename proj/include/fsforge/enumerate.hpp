#pragma once

#include <cstdint>
#include <string>

#include "fsforge/tensor.hpp"

namespace fsforge {

enum class SolutionFilter { none, s, f_trace };

std::string filter_name(SolutionFilter f);
SolutionFilter filter_from_name(const std::string& name);

// Complete, duplicate-free, ascending (lexicographic by flat entry array)
// list of solutions over F_p for basis size n.
struct SolutionSet {
    size_t n = 0;
    unsigned p = 0;
    SolutionFilter filter = SolutionFilter::none;
    std::vector<std::vector<uint8_t>> solutions;

    size_t count() const { return solutions.size(); }
    FsTensor tensor(size_t idx) const;
};

// Depth-first enumeration over the n^4 entries in lexicographic order; every
// defining identity is checked as soon as its last entry is assigned, so
// partial assignments are cut early. The candidate space can be split by a
// fixed prefix of entries across workers; per-prefix results concatenate in
// prefix order, so output is identical for any worker count.
// Guard: n in {1,2} and p^(n^4) <= 2^32.
SolutionSet enumerate_fs(size_t n, unsigned p, SolutionFilter filter, unsigned workers = 0);

struct OrbitReport {
    size_t orbit_count = 0;
    std::vector<std::vector<uint8_t>> representatives;  // lexicographically minimal members
    std::vector<size_t> orbit_sizes;                    // aligned with representatives
};

// Orbits of the invertible-basis-change action, computed by a sweep over all
// of GL_n(F_p) with union-find. Throws std::logic_error if the set is not
// closed under the action (it always is for complete inputs).
OrbitReport classify_orbits(const SolutionSet& s);

}  // namespace fsforge
