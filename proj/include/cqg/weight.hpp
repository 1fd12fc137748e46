#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cqg {

// Integral weight in fundamental-weight coordinates.
struct Weight {
    std::vector<long> c;

    Weight() = default;
    explicit Weight(std::size_t rank) : c(rank, 0) {}
    Weight(std::initializer_list<long> xs) : c(xs) {}
    explicit Weight(std::vector<long> xs) : c(std::move(xs)) {}

    std::size_t size() const { return c.size(); }
    long& operator[](std::size_t i) { return c[i]; }
    long operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const {
        for (long x : c)
            if (x != 0) return false;
        return true;
    }
    bool is_dominant() const {
        for (long x : c)
            if (x < 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const {
        Weight r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Weight operator*(long k, Weight a) {
        for (auto& x : a.c) x *= k;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

    // "(1,0,2)"
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (long x : w.c) h = (h ^ std::hash<long>{}(x)) * 1099511628211ULL;
        return h;
    }
};

}  // namespace cqg
