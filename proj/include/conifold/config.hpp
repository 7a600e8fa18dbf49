#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <conifold/ambient.hpp>

namespace conifold {

// A complete intersection configuration: the ambient product of projective
// spaces together with an m x k integer matrix whose row i is the multidegree
// of the i-th defining equation.  Whether the data actually cuts out a
// Calabi-Yau threefold is a question for validate(), not the constructor;
// only structural shape (rectangularity, column count) is enforced here.
class ConfigMatrix {
public:
    ConfigMatrix(AmbientSpace ambient, std::vector<Multidegree> rows)
        : ambient_(std::move(ambient)), rows_(std::move(rows)) {
        for (const auto& r : rows_) {
            if (static_cast<int>(r.size()) != ambient_.k())
                throw std::invalid_argument(
                    "config row length does not match the number of ambient factors");
        }
    }

    const AmbientSpace& ambient() const { return ambient_; }
    int num_equations() const { return static_cast<int>(rows_.size()); }
    const std::vector<Multidegree>& rows() const { return rows_; }
    const Multidegree& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

    bool operator==(const ConfigMatrix& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    AmbientSpace ambient_;
    std::vector<Multidegree> rows_;
};

// Every condition the configuration fails to meet, as human-readable strings.
// Strict mode demands positive degrees in every equation (the hypothesis the
// normal bundle analysis needs); relaxed mode only forbids negative entries,
// which is enough for the dimension-count checks.
inline std::vector<std::string> validate(const ConfigMatrix& cfg, bool strict) {
    std::vector<std::string> out;
    const AmbientSpace& X = cfg.ambient();
    const int m = cfg.num_equations();

    if (m < 1) out.push_back("no defining equations (m must be at least 1)");
    if (X.total_dim() != m + 3)
        out.push_back("dimension condition violated: sum of ambient dimensions is " +
                      std::to_string(X.total_dim()) + " but m + 3 = " + std::to_string(m + 3));

    const int floor = strict ? 1 : 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < X.k(); ++j) {
            const int d = cfg.row(i)[static_cast<std::size_t>(j)];
            if (d < floor)
                out.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + std::to_string(d) + " is below " +
                              std::to_string(floor));
        }
    }

    for (int j = 0; j < X.k(); ++j) {
        long long sum = 0;
        for (int i = 0; i < m; ++i) sum += cfg.row(i)[static_cast<std::size_t>(j)];
        if (sum != X.n(j) + 1)
            out.push_back("column " + std::to_string(j) + " sums to " + std::to_string(sum) +
                          ", Calabi-Yau condition needs " + std::to_string(X.n(j) + 1));
    }
    return out;
}

inline bool is_valid(const ConfigMatrix& cfg, bool strict) {
    return validate(cfg, strict).empty();
}

namespace detail {

// Extend a partially built matrix by one more row.  Rows are produced in
// lexicographically descending order (each new row must compare <= the
// previous one), which both canonicalizes row order and removes duplicate
// row-multisets from the search.
inline void extend_config(const AmbientSpace& X, int m, std::vector<int>& remaining,
                          std::vector<Multidegree>& rows, Multidegree& current, int col,
                          std::vector<std::vector<Multidegree>>& out) {
    const int k = X.k();
    const int rows_left = m - static_cast<int>(rows.size());
    if (col == k) {
        const Multidegree* bound = rows.empty() ? nullptr : &rows.back();
        if (bound && current > *bound) return;
        rows.push_back(current);
        if (static_cast<int>(rows.size()) == m) {
            bool done = true;
            for (int j = 0; j < k; ++j) done = done && remaining[static_cast<std::size_t>(j)] == 0;
            if (done) out.push_back(rows);
        } else {
            Multidegree next(static_cast<std::size_t>(k), 0);
            extend_config(X, m, remaining, rows, next, 0, out);
        }
        rows.pop_back();
        return;
    }
    // Later rows all need an entry >= 1 in this column, so cap the amount the
    // current row may consume.
    const int budget = remaining[static_cast<std::size_t>(col)] - (rows_left - 1);
    for (int d = 1; d <= budget; ++d) {
        current[static_cast<std::size_t>(col)] = d;
        remaining[static_cast<std::size_t>(col)] -= d;
        extend_config(X, m, remaining, rows, current, col + 1, out);
        remaining[static_cast<std::size_t>(col)] += d;
    }
    current[static_cast<std::size_t>(col)] = 0;
}

}  // namespace detail

// All strictly valid configurations on the given ambient, one per
// row-multiset, rows sorted lexicographically descending.  Deterministic.
inline std::vector<ConfigMatrix> enumerate_configs(const AmbientSpace& X) {
    const int m = X.total_dim() - 3;
    if (m < 1)
        throw std::invalid_argument(
            "ambient dimensions sum to " + std::to_string(X.total_dim()) +
            "; need at least 4 for a threefold complete intersection");
    std::vector<int> remaining;
    for (int j = 0; j < X.k(); ++j) remaining.push_back(X.n(j) + 1);

    std::vector<std::vector<Multidegree>> found;
    std::vector<Multidegree> rows;
    Multidegree current(static_cast<std::size_t>(X.k()), 0);
    detail::extend_config(X, m, remaining, rows, current, 0, found);

    std::sort(found.begin(), found.end());
    std::vector<ConfigMatrix> out;
    for (auto& rws : found) out.emplace_back(X, std::move(rws));
    return out;
}

// All ambient factor-dimension vectors (weakly increasing, so each product of
// projective spaces appears once) whose dimensions sum to at least 4 and at
// most max_total.  Ordered by total dimension, then lexicographically.
inline std::vector<std::vector<int>> enumerate_ambients(int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> part;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.push_back(part);
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            part.push_back(p);
            self(self, remaining - p, p);
            part.pop_back();
        }
    };
    for (int total = 4; total <= max_total; ++total) rec(rec, total, 1);
    return out;
}

}  // namespace conifold
