#pragma once

#include "ct/abelian.hpp"
#include "ct/group_table.hpp"

#include <memory>
#include <vector>

namespace ct {

/// Integer matrix acting on exponent vectors: (M a)_i = sum_j M[i][j] a_j
/// mod d_i. Row-major, rank x rank.
using ActionMatrix = std::vector<long long>;

/// Action of Q on A by one automorphism matrix per Q element, plus the
/// induced diagonal action on the dual group. Validated by verify_action.
class Action {
public:
    Action(AbGroupPtr a, GroupPtr q, std::vector<ActionMatrix> mats);

    static Action trivial(AbGroupPtr a, GroupPtr q);

    const AbelianGroup& a() const { return *a_; }
    const FiniteGroup& q() const { return *q_; }
    const AbGroupPtr& a_ptr() const { return a_; }
    const GroupPtr& q_ptr() const { return q_; }
    const ActionMatrix& matrix(int g) const { return mats_[g]; }
    std::size_t size() const { return mats_.size(); }

    AbElement act(int g, const AbElement& x) const;
    DualCharacter dual_act(int g, const DualCharacter& chi) const;

    /// Apply the matrix of g without consulting the multiplication table
    /// (used by verify_action itself).
    AbElement apply_matrix(const ActionMatrix& m, const AbElement& x) const;

private:
    AbGroupPtr a_;
    GroupPtr q_;
    std::vector<ActionMatrix> mats_;
    std::vector<ActionMatrix> dual_mats_;  // matrix of chi -> g(chi), built from g^-1's matrix

    void build_dual();
};

/// Checks that every matrix is a well-defined automorphism of A and that
/// g -> matrix respects the multiplication table of Q.
Verdict verify_action(const Action& action);

/// All automorphism matrices of A (canonical representatives with entries
/// M[i][j] in [0, d_i)). Brute-force; meant for |A| at desk scale.
std::vector<ActionMatrix> automorphism_group(const AbelianGroup& a);

}  // namespace ct
