#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "lct/rational.hpp"

namespace lct {

/// Finitely supported map from degrees to exact rationals. Zero values are
/// never stored, so map equality is function equality.
class GradedMap {
public:
    using Map = std::map<int, Rational>;

    GradedMap() = default;
    GradedMap(std::initializer_list<std::pair<int, Rational>> init) {
        for (const auto& [n, v] : init) {
            add(n, v);
        }
    }

    static GradedMap single(int n, Rational v) {
        GradedMap m;
        m.set(n, std::move(v));
        return m;
    }

    const Map& entries() const { return entries_; }

    Rational value(int n) const {
        auto it = entries_.find(n);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(int n, Rational v) {
        if (v == 0) {
            entries_.erase(n);
        } else {
            entries_[n] = std::move(v);
        }
    }

    void add(int n, const Rational& v) {
        if (v == 0) {
            return;
        }
        auto [it, inserted] = entries_.emplace(n, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) {
                entries_.erase(it);
            }
        }
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::optional<int> min_degree() const {
        if (entries_.empty()) {
            return std::nullopt;
        }
        return entries_.begin()->first;
    }

    std::optional<int> max_degree() const {
        if (entries_.empty()) {
            return std::nullopt;
        }
        return entries_.rbegin()->first;
    }

    /// Degree n moves to n - a, matching the grading twist M(a).
    GradedMap shifted(int a) const {
        GradedMap out;
        for (const auto& [n, v] : entries_) {
            out.entries_.emplace(n - a, v);
        }
        return out;
    }

    GradedMap& operator+=(const GradedMap& other) {
        for (const auto& [n, v] : other.entries_) {
            add(n, v);
        }
        return *this;
    }

    GradedMap& operator-=(const GradedMap& other) {
        for (const auto& [n, v] : other.entries_) {
            add(n, -v);
        }
        return *this;
    }

    friend GradedMap operator+(GradedMap lhs, const GradedMap& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend GradedMap operator-(GradedMap lhs, const GradedMap& rhs) {
        lhs -= rhs;
        return lhs;
    }

    GradedMap scaled(const Rational& c) const {
        GradedMap out;
        if (c == 0) {
            return out;
        }
        for (const auto& [n, v] : entries_) {
            out.entries_.emplace(n, v * c);
        }
        return out;
    }

    bool all_nonnegative() const {
        for (const auto& [n, v] : entries_) {
            (void)n;
            if (v < 0) {
                return false;
            }
        }
        return true;
    }

    /// Sum of all stored values.
    Rational total() const {
        Rational t = 0;
        for (const auto& [n, v] : entries_) {
            (void)n;
            t += v;
        }
        return t;
    }

    bool operator==(const GradedMap&) const = default;

private:
    Map entries_;
};

/// Iterated forward difference of an eventually-zero-upward sequence:
/// the t-th image of f(n) -> f(n) - f(n+1).
inline GradedMap delta(const GradedMap& seq, int t) {
    GradedMap cur = seq;
    for (int step = 0; step < t; ++step) {
        GradedMap next;
        for (const auto& [n, v] : cur.entries()) {
            next.add(n, v);
            next.add(n - 1, -v);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace lct
