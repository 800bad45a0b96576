#pragma once

// Arbitrary-precision natural numbers for exact inequality checks.
// Only what the identity checks need: add, multiply, power by a
// machine-size exponent, comparison, decimal rendering.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sylowlab {

class BigNat {
public:
    BigNat() = default;

    BigNat(std::uint64_t v) {  // NOLINT: implicit by design
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        }
        return std::strong_ordering::equal;
    }

    BigNat& operator+=(const BigNat& rhs) {
        if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i];
            if (i < rhs.limbs_.size()) cur += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }

    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigNat r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigNat& operator*=(const BigNat& rhs) { return *this = *this * rhs; }

    BigNat pow(std::uint64_t e) const {
        BigNat base = *this, acc = 1;
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            // divide by 1e9, collecting the remainder as one digit group
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string group = std::to_string(rem);
            if (work.empty()) {
                out.insert(0, group);
            } else {
                out.insert(0, std::string(9 - group.size(), '0') + group);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;  // base 2^32, little-endian, no trailing zeros
};

}  // namespace sylowlab
