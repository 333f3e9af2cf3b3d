#pragma once

// Test-only reference computations. Everything here works on fully expanded
// rows with nested loops so it shares no code path with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tieroc/dataset.hpp"

namespace oracle {

struct Rows {
    std::vector<double> pos;
    std::vector<double> neg;
};

inline Rows expand(const std::vector<tieroc::CountRecord>& counts) {
    Rows r;
    for (const auto& c : counts) {
        r.neg.insert(r.neg.end(), c.neg, c.score);
        r.pos.insert(r.pos.end(), c.pos, c.score);
    }
    return r;
}

inline Rows split(const std::vector<tieroc::Sample>& samples) {
    Rows r;
    for (const auto& s : samples) {
        (s.label == tieroc::Label::Positive ? r.pos : r.neg).push_back(s.score);
    }
    return r;
}

struct Pairs {
    std::uint64_t gt = 0;
    std::uint64_t eq = 0;
    std::uint64_t lt = 0;
};

inline Pairs count_pairs(const Rows& r) {
    Pairs p;
    for (double a : r.pos) {
        for (double b : r.neg) {
            if (a > b) {
                ++p.gt;
            } else if (a == b) {
                ++p.eq;
            } else {
                ++p.lt;
            }
        }
    }
    return p;
}

// Per-subject placement values and DeLong standard error, row by row.
inline double delong_se(const Rows& r) {
    const double np = static_cast<double>(r.pos.size());
    const double nn = static_cast<double>(r.neg.size());
    std::vector<double> v10;
    std::vector<double> v01;
    for (double a : r.pos) {
        double s = 0;
        for (double b : r.neg) {
            s += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
        }
        v10.push_back(s / nn);
    }
    for (double b : r.neg) {
        double s = 0;
        for (double a : r.pos) {
            s += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
        }
        v01.push_back(s / np);
    }
    auto var = [](const std::vector<double>& v) {
        double m = 0;
        for (double x : v) {
            m += x;
        }
        m /= static_cast<double>(v.size());
        double ss = 0;
        for (double x : v) {
            ss += (x - m) * (x - m);
        }
        return ss / static_cast<double>(v.size() - 1);
    };
    return std::sqrt(var(v10) / np + var(v01) / nn);
}

inline std::vector<tieroc::CountRecord> table1() {
    return {{0, 52, 35}, {1, 32, 50}};
}

inline std::vector<tieroc::CountRecord> table2() {
    return {{1, 31, 21}, {2, 21, 14}, {3, 11, 17}, {4, 21, 33}};
}

inline std::vector<tieroc::Sample> table1_rows() {
    std::vector<tieroc::Sample> rows;
    auto add = [&](double s, tieroc::Label l, int n) {
        for (int i = 0; i < n; ++i) {
            rows.push_back({s, l});
        }
    };
    add(0, tieroc::Label::Negative, 52);
    add(0, tieroc::Label::Positive, 35);
    add(1, tieroc::Label::Negative, 32);
    add(1, tieroc::Label::Positive, 50);
    return rows;
}

// Random discrete dataset: `distinct` score levels drawn from a spread of
// integers, `n` rows, both classes guaranteed present. Every level is used
// when n >= distinct.
inline std::vector<tieroc::Sample> random_discrete(std::mt19937_64& gen, int distinct, int n) {
    std::uniform_int_distribution<int> level_value(-1000, 1000);
    std::vector<double> levels;
    while (static_cast<int>(levels.size()) < distinct) {
        const double v = level_value(gen) / 8.0;
        bool dup = false;
        for (double l : levels) {
            dup = dup || l == v;
        }
        if (!dup) {
            levels.push_back(v);
        }
    }
    std::uniform_int_distribution<int> pick(0, distinct - 1);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(gen));
    std::vector<tieroc::Sample> rows;
    for (int i = 0; i < n; ++i) {
        rows.push_back({levels[static_cast<std::size_t>(pick(gen))],
                        coin(gen) ? tieroc::Label::Positive : tieroc::Label::Negative});
    }
    for (int i = 0; i < std::min(distinct, n); ++i) {
        rows[static_cast<std::size_t>(i)].score = levels[static_cast<std::size_t>(i)];
    }
    rows[0].label = tieroc::Label::Positive;
    rows[1].label = tieroc::Label::Negative;
    return rows;
}

}  // namespace oracle
