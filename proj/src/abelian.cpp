#include "ct/abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace ct {

AbelianGroup::AbelianGroup(std::vector<long long> factors) : factors_(std::move(factors)) {
    for (long long d : factors_)
        if (d < 2) throw std::invalid_argument("AbelianGroup: every factor must be >= 2");
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 0;) {
        if (i + 1 < factors_.size()) strides_[i] = strides_[i + 1] * factors_[i + 1];
        order_ *= factors_[i];
        exponent_ = std::lcm(exponent_, factors_[i]);
    }
}

ExpVec AbelianGroup::reduce(ExpVec v) const {
    if (v.size() != factors_.size()) throw std::invalid_argument("AbelianGroup: rank mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] %= factors_[i];
        if (v[i] < 0) v[i] += factors_[i];
    }
    return v;
}

long long AbelianGroup::index_of(const ExpVec& v) const {
    ExpVec r = reduce(v);
    long long idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) idx += r[i] * strides_[i];
    return idx;
}

ExpVec AbelianGroup::exps_of(long long index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("AbelianGroup: bad element index");
    ExpVec v(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        v[i] = index / strides_[i];
        index %= strides_[i];
    }
    return v;
}

AbElement AbelianGroup::mul(const AbElement& a, const AbElement& b) const {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("AbelianGroup: rank mismatch");
    ExpVec v(a.e.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.e[i] + b.e[i];
    return AbElement{reduce(std::move(v))};
}

AbElement AbelianGroup::inv(const AbElement& a) const {
    ExpVec v(a.e.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.e[i];
    return AbElement{reduce(std::move(v))};
}

AbElement AbelianGroup::pow(const AbElement& a, long long k) const {
    ExpVec v(a.e.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.e[i] * (k % factors_[i]);
    return AbElement{reduce(std::move(v))};
}

bool AbelianGroup::is_identity(const AbElement& a) const {
    for (long long x : a.e)
        if (x != 0) return false;
    return true;
}

DualCharacter AbelianGroup::mul(const DualCharacter& a, const DualCharacter& b) const {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("AbelianGroup: rank mismatch");
    ExpVec v(a.e.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.e[i] + b.e[i];
    return DualCharacter{reduce(std::move(v))};
}

DualCharacter AbelianGroup::inv(const DualCharacter& a) const {
    ExpVec v(a.e.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.e[i];
    return DualCharacter{reduce(std::move(v))};
}

bool AbelianGroup::is_trivial(const DualCharacter& a) const {
    for (long long x : a.e)
        if (x != 0) return false;
    return true;
}

RootExp AbelianGroup::pairing(const DualCharacter& chi, const AbElement& a,
                              long long ambient_order) const {
    if (chi.e.size() != rank() || a.e.size() != rank())
        throw std::invalid_argument("pairing: element/character rank mismatch");
    if (ambient_order % exponent_ != 0)
        throw std::invalid_argument("pairing: ambient order not divisible by exp(A)");
    long long num = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        long long term = (ambient_order / factors_[i]) * ((chi.e[i] * a.e[i]) % factors_[i]);
        num = (num + term) % ambient_order;
    }
    return RootExp(num, ambient_order);
}

}  // namespace ct
