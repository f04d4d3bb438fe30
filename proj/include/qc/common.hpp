#ifndef QC_COMMON_HPP
#define QC_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qc {

/// Error raised when an enumeration or construction exceeds its configured budget.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Nonnegative integers extended with +infinity. Used for minimum distances
/// and bound values; infinity is a real value here, never a sentinel.
class ExtNat {
  public:
    constexpr ExtNat() : inf_(false), val_(0) {}
    static constexpr ExtNat of(std::uint64_t v) {
        ExtNat e;
        e.val_ = v;
        return e;
    }
    static constexpr ExtNat infinity() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return inf_; }
    constexpr std::uint64_t value() const {
        return inf_ ? std::numeric_limits<std::uint64_t>::max() : val_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.val_ == b.val_);
    }
    friend constexpr bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }
    friend constexpr bool operator<(ExtNat a, ExtNat b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.val_ < b.val_;
    }
    friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
    friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }

    friend constexpr ExtNat operator*(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return infinity();
        return of(a.val_ * b.val_);
    }
    friend ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
    friend ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "inf" : std::to_string(val_); }

  private:
    bool inf_;
    std::uint64_t val_;
};

/// SplitMix64. Deterministic across platforms, unlike <random> distributions;
/// the selftest report must be byte-identical between runs.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

}  // namespace qc

#endif
