#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ct {

/// The root of unity exp(2*pi*i*num/order), stored as its exponent.
/// Multiplying roots adds exponents; mixed orders merge to the lcm.
class RootExp {
public:
    RootExp() : num_(0), order_(1) {}
    RootExp(long long num, long long order) : order_(order) {
        if (order < 1) throw std::invalid_argument("RootExp: order must be >= 1");
        num_ = num % order;
        if (num_ < 0) num_ += order;
    }

    static RootExp one(long long order = 1) { return RootExp(0, order); }

    long long num() const { return num_; }
    long long order() const { return order_; }
    bool is_one() const { return num_ == 0; }

    RootExp rescaled(long long new_order) const {
        if (new_order % order_ != 0)
            throw std::invalid_argument("RootExp::rescaled: order does not divide new order");
        return RootExp(num_ * (new_order / order_), new_order);
    }

    RootExp operator*(const RootExp& rhs) const {
        long long n = std::lcm(order_, rhs.order_);
        return RootExp(num_ * (n / order_) + rhs.num_ * (n / rhs.order_), n);
    }
    RootExp inverse() const { return RootExp(order_ - num_, order_); }
    RootExp pow(long long k) const {
        long long e = (num_ * (k % order_)) % order_;
        return RootExp(e, order_);
    }

    friend bool operator==(const RootExp& a, const RootExp& b) {
        long long n = std::lcm(a.order_, b.order_);
        return a.num_ * (n / a.order_) == b.num_ * (n / b.order_);
    }
    friend bool operator!=(const RootExp& a, const RootExp& b) { return !(a == b); }

private:
    long long num_;
    long long order_;
};

}  // namespace ct
