#pragma once

#include "ct/rootexp.hpp"

#include <memory>
#include <vector>

namespace ct {

using ExpVec = std::vector<long long>;

/// Element of A, as exponents w.r.t. the cyclic factor generators,
/// coordinate i reduced mod d_i.
struct AbElement {
    ExpVec e;
    bool operator==(const AbElement&) const = default;
};

/// Character of A (element of the dual group), same coordinates: the
/// character sending generator g_i to exp(2*pi*i * e_i / d_i).
struct DualCharacter {
    ExpVec e;
    bool operator==(const DualCharacter&) const = default;
};

/// Finite abelian group as a product of cyclic factors Z/d_1 x ... x Z/d_r,
/// each d_i >= 2 (empty factor list = trivial group). Element indices are
/// mixed-radix over the exponent vectors, identity at index 0.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<long long> factors);

    std::size_t rank() const { return factors_.size(); }
    long long factor(std::size_t i) const { return factors_[i]; }
    const std::vector<long long>& factors() const { return factors_; }
    long long order() const { return order_; }
    long long exponent() const { return exponent_; }

    ExpVec reduce(ExpVec v) const;
    long long index_of(const ExpVec& v) const;
    ExpVec exps_of(long long index) const;

    AbElement element(long long index) const { return AbElement{exps_of(index)}; }
    long long index(const AbElement& a) const { return index_of(a.e); }
    long long index(const DualCharacter& c) const { return index_of(c.e); }
    DualCharacter character(long long index) const { return DualCharacter{exps_of(index)}; }

    AbElement identity() const { return AbElement{ExpVec(rank(), 0)}; }
    DualCharacter trivial_character() const { return DualCharacter{ExpVec(rank(), 0)}; }

    AbElement mul(const AbElement& a, const AbElement& b) const;
    AbElement inv(const AbElement& a) const;
    AbElement pow(const AbElement& a, long long k) const;
    bool is_identity(const AbElement& a) const;

    DualCharacter mul(const DualCharacter& a, const DualCharacter& b) const;
    DualCharacter inv(const DualCharacter& a) const;
    bool is_trivial(const DualCharacter& a) const;

    /// <chi, a> as a root of unity of the given ambient order (must be a
    /// multiple of exp(A)). Throws on rank mismatch.
    RootExp pairing(const DualCharacter& chi, const AbElement& a, long long ambient_order) const;

private:
    std::vector<long long> factors_;
    std::vector<long long> strides_;
    long long order_ = 1;
    long long exponent_ = 1;
};

using AbGroupPtr = std::shared_ptr<const AbelianGroup>;

inline AbGroupPtr make_abelian(std::vector<long long> factors) {
    return std::make_shared<AbelianGroup>(std::move(factors));
}

}  // namespace ct
