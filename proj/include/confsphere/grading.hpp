#ifndef CONFSPHERE_GRADING_HPP
#define CONFSPHERE_GRADING_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace confsphere {

// Particle-count grading. Slot 0 counts particles labelled in the base
// component; slot j+1 counts particles in the j-th reduced component (which
// is also the pi_0 coordinate there). Entries may go negative after group
// completion, except slot 0.
struct Weight {
    std::vector<int> v;

    Weight() = default;
    explicit Weight(std::size_t ncomponents) : v(ncomponents + 1, 0) {}

    int total() const { return std::accumulate(v.begin(), v.end(), 0); }
    std::size_t slots() const { return v.size(); }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += o.v[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] -= o.v[i];
        return *this;
    }
    Weight operator+(const Weight& o) const {
        Weight w = *this;
        return w += o;
    }
    Weight operator-(const Weight& o) const {
        Weight w = *this;
        return w -= o;
    }
    Weight scaled(int f) const {
        Weight w = *this;
        for (int& x : w.v)
            x *= f;
        return w;
    }
    bool nonnegative() const {
        for (int x : v)
            if (x < 0)
                return false;
        return true;
    }

    auto operator<=>(const Weight&) const = default;
};

}  // namespace confsphere

#endif
