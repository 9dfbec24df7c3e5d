#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tdc {

/// Element of the dimension lattice Z>=0 plus infinity.
class Dim {
public:
    constexpr Dim() = default;
    constexpr Dim(std::uint64_t n) : value_(n) {}  // NOLINT: implicit by design of the lattice

    static constexpr Dim infinite() {
        Dim d;
        d.infinite_ = true;
        return d;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    std::uint64_t value() const {
        if (infinite_) throw std::domain_error("value() of an infinite dimension");
        return value_;
    }

    friend constexpr Dim operator+(Dim a, Dim b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return Dim(a.value_ + b.value_);
    }
    Dim& operator+=(Dim other) { return *this = *this + other; }

    friend constexpr bool operator==(Dim a, Dim b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Dim a, Dim b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

}  // namespace tdc
