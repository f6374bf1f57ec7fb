#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ct {

/// Yes/no answer with the first violated identity spelled out.
struct Verdict {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// Finite group given by its full multiplication table of element indices.
/// Index 0 is the identity. Group axioms (identity laws, inverses, Latin
/// square, associativity) are verified at construction: exhaustively for
/// order <= 64, on seeded random triples above that.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<int> table);

    std::size_t order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int pow(int a, long long k) const;
    long long element_order(int a) const;

    const std::vector<int>& table() const { return table_; }

    /// A small generating set found greedily (identity excluded).
    std::vector<int> generators() const;

    bool is_abelian() const;

private:
    std::size_t n_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;

    void validate() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr dihedral_group(int n);  // order 2n, n >= 2
GroupPtr quaternion_group();     // Q8

/// All isomorphism-class representatives of a given order, for the small
/// orders the test suites need (1, 2, 4, 8).
std::vector<GroupPtr> groups_of_order(int n);

}  // namespace ct
