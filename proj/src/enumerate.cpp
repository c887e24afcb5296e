#include "fsforge/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "fsforge/verify.hpp"

namespace fsforge {

std::string filter_name(SolutionFilter f) {
    switch (f) {
        case SolutionFilter::none: return "none";
        case SolutionFilter::s: return "s";
        default: return "f-trace";
    }
}

SolutionFilter filter_from_name(const std::string& name) {
    if (name == "none") return SolutionFilter::none;
    if (name == "s") return SolutionFilter::s;
    if (name == "f-trace") return SolutionFilter::f_trace;
    throw std::invalid_argument("unknown filter: " + name);
}

FsTensor SolutionSet::tensor(size_t idx) const {
    FieldSpec f = FieldSpec::prime(p);
    FsTensor t(f, n);
    for (size_t e = 0; e < solutions[idx].size(); ++e) t.entries()[e] = Scalar(f, solutions[idx][e]);
    return t;
}

namespace {

// one defining identity, evaluated as sum(plus) - sum(minus) == 0 mod p
struct PruneEq {
    std::vector<std::pair<uint16_t, uint16_t>> plus, minus;
};

struct EqTable {
    size_t entries;
    std::vector<std::vector<PruneEq>> by_depth;
};

EqTable build_equations(size_t n) {
    EqTable tab;
    tab.entries = n * n * n * n;
    tab.by_depth.assign(tab.entries, {});
    auto idx = [n](size_t i, size_t j, size_t u, size_t v) {
        return (uint16_t)(((i * n + j) * n + u) * n + v);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < n; ++v)
                        for (size_t w = 0; w < n; ++w) {
                            PruneEq e12, e13;
                            for (size_t k = 0; k < n; ++k) {
                                e12.plus.push_back({idx(i, j, u, k), idx(k, l, v, w)});
                                e12.minus.push_back({idx(j, l, v, k), idx(i, k, u, w)});
                                e13.plus.push_back({idx(i, j, u, k), idx(k, l, v, w)});
                                e13.minus.push_back({idx(i, l, k, w), idx(k, j, u, v)});
                            }
                            auto dep = [](const PruneEq& e) {
                                uint16_t m = 0;
                                for (auto& t : e.plus) m = std::max({m, t.first, t.second});
                                for (auto& t : e.minus) m = std::max({m, t.first, t.second});
                                return m;
                            };
                            tab.by_depth[dep(e12)].push_back(std::move(e12));
                            tab.by_depth[dep(e13)].push_back(std::move(e13));
                        }
    return tab;
}

bool eqs_hold(const std::vector<PruneEq>& eqs, const uint8_t* x, int p) {
    for (const PruneEq& e : eqs) {
        int s = 0;
        for (auto& t : e.plus) s += x[t.first] * x[t.second];
        for (auto& t : e.minus) s -= x[t.first] * x[t.second];
        if (s % p != 0) return false;
    }
    return true;
}

void dfs(const EqTable& tab, int p, std::vector<uint8_t>& x, size_t t,
         std::vector<std::vector<uint8_t>>& out) {
    if (t == tab.entries) {
        out.push_back(x);
        return;
    }
    for (int val = 0; val < p; ++val) {
        x[t] = (uint8_t)val;
        if (eqs_hold(tab.by_depth[t], x.data(), p)) dfs(tab, p, x, t + 1, out);
    }
    x[t] = 0;
}

}  // namespace

SolutionSet enumerate_fs(size_t n, unsigned p, SolutionFilter filter, unsigned workers) {
    if (n < 1 || n > 2) throw std::invalid_argument("enumeration supports n in {1, 2}");
    FieldSpec field = FieldSpec::prime(p);
    double space = std::pow((double)p, (double)(n * n * n * n));
    if (space > 4294967296.0) throw std::invalid_argument("enumeration guard exceeded: p^(n^4) > 2^32");

    EqTable tab = build_equations(n);
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
    }

    // split by a prefix of assigned entries
    size_t prefix_len = 0;
    {
        size_t span = 1;
        while (prefix_len < tab.entries && span < 4 * (size_t)workers) {
            span *= p;
            ++prefix_len;
        }
    }
    std::vector<std::vector<uint8_t>> prefixes;
    {
        std::vector<uint8_t> x(tab.entries, 0);
        // enumerate consistent prefixes in lexicographic order
        std::function<void(size_t)> rec = [&](size_t t) {
            if (t == prefix_len) {
                prefixes.push_back(std::vector<uint8_t>(x.begin(), x.begin() + prefix_len));
                return;
            }
            for (int val = 0; val < (int)p; ++val) {
                x[t] = (uint8_t)val;
                if (eqs_hold(tab.by_depth[t], x.data(), (int)p)) rec(t + 1);
            }
            x[t] = 0;
        };
        rec(0);
    }

    std::vector<std::vector<std::vector<uint8_t>>> results(prefixes.size());
    std::atomic<size_t> next{0};
    auto worker_fn = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            std::vector<uint8_t> x(tab.entries, 0);
            std::copy(prefixes[i].begin(), prefixes[i].end(), x.begin());
            dfs(tab, (int)p, x, prefix_len, results[i]);
        }
    };
    if (workers == 1 || prefixes.size() <= 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker_fn);
        for (auto& t : pool) t.join();
    }

    SolutionSet set;
    set.n = n;
    set.p = p;
    set.filter = filter;
    for (auto& chunk : results)
        for (auto& s : chunk) set.solutions.push_back(std::move(s));
    // prefix order already yields ascending output; re-sort as a merge safety net
    std::sort(set.solutions.begin(), set.solutions.end());

    if (filter != SolutionFilter::none) {
        std::vector<std::vector<uint8_t>> kept;
        for (size_t i = 0; i < set.solutions.size(); ++i) {
            FsTensor t = set.tensor(i);
            bool ok = filter == SolutionFilter::s ? check_s(t).passed : check_f_trace(t).passed;
            if (ok) kept.push_back(set.solutions[i]);
        }
        set.solutions = std::move(kept);
    }
    return set;
}

namespace {

std::vector<std::vector<uint8_t>> all_invertible(size_t n, unsigned p) {
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> m(n * n, 0);
    FieldSpec f = FieldSpec::prime(p);
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == n * n) {
            DenseMatrix dm(f, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) dm.at(r, c) = Scalar(f, m[r * n + c]);
            if (invert(dm)) out.push_back(m);
            return;
        }
        for (unsigned val = 0; val < p; ++val) {
            m[t] = (uint8_t)val;
            rec(t + 1);
        }
        m[t] = 0;
    };
    rec(0);
    return out;
}

}  // namespace

OrbitReport classify_orbits(const SolutionSet& s) {
    FieldSpec f = FieldSpec::prime(s.p);
    auto units = all_invertible(s.n, s.p);

    std::vector<size_t> parent(s.count());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (size_t i = 0; i < s.count(); ++i) {
        FsTensor t = s.tensor(i);
        for (const auto& um : units) {
            DenseMatrix u(f, s.n, s.n);
            for (size_t r = 0; r < s.n; ++r)
                for (size_t c = 0; c < s.n; ++c) u.at(r, c) = Scalar(f, um[r * s.n + c]);
            FsTensor ct = conjugate(t, u);
            std::vector<uint8_t> flat(ct.entries().size());
            for (size_t e = 0; e < flat.size(); ++e) flat[e] = (uint8_t)ct.entries()[e].residue();
            auto it = std::lower_bound(s.solutions.begin(), s.solutions.end(), flat);
            if (it == s.solutions.end() || *it != flat)
                throw std::logic_error("solution set is not closed under the action");
            unite(i, (size_t)(it - s.solutions.begin()));
        }
    }

    OrbitReport rep;
    std::vector<size_t> roots;
    for (size_t i = 0; i < s.count(); ++i)
        if (find(i) == i) roots.push_back(i);
    rep.orbit_count = roots.size();
    for (size_t r : roots) {
        rep.representatives.push_back(s.solutions[r]);
        size_t sz = 0;
        for (size_t i = 0; i < s.count(); ++i) sz += find(i) == r;
        rep.orbit_sizes.push_back(sz);
    }
    return rep;
}

}  // namespace fsforge
