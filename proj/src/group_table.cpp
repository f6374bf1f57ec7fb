#include "ct/group_table.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ct {

FiniteGroup::FiniteGroup(std::vector<int> table) : table_(std::move(table)) {
    std::size_t n = static_cast<std::size_t>(std::lround(std::sqrt(double(table_.size()))));
    if (n * n != table_.size() || n == 0)
        throw std::invalid_argument("FiniteGroup: table is not a nonempty square");
    n_ = n;
    for (int x : table_)
        if (x < 0 || static_cast<std::size_t>(x) >= n_)
            throw std::invalid_argument("FiniteGroup: table entry out of range");
    inv_.assign(n_, -1);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (mul(int(a), int(b)) == 0) inv_[a] = int(b);
    validate();
}

void FiniteGroup::validate() const {
    const int n = int(n_);
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a) throw std::invalid_argument("FiniteGroup: 1*g != g");
        if (mul(a, 0) != a) throw std::invalid_argument("FiniteGroup: g*1 != g");
        if (inv_[a] < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
        if (mul(inv_[a], a) != 0) throw std::invalid_argument("FiniteGroup: inverse fails");
    }
    // Latin square: rows and columns are permutations.
    std::vector<char> seen(n_);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[mul(a, b)] = 1;
        for (char s : seen)
            if (!s) throw std::invalid_argument("FiniteGroup: row is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[mul(b, a)] = 1;
        for (char s : seen)
            if (!s) throw std::invalid_argument("FiniteGroup: column is not a permutation");
    }
    auto check = [this](int a, int b, int c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("FiniteGroup: associativity fails");
    };
    if (n_ <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(0xC0C171E5u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 1 << 18; ++k) check(pick(rng), pick(rng), pick(rng));
    }
}

int FiniteGroup::pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 0;
    while (k-- > 0) r = mul(r, a);
    return r;
}

long long FiniteGroup::element_order(int a) const {
    long long ord = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::vector<int> FiniteGroup::generators() const {
    std::vector<int> gens;
    std::vector<char> in(n_, 0);
    in[0] = 1;
    std::size_t count = 1;
    while (count < n_) {
        int next = -1;
        for (std::size_t g = 1; g < n_; ++g)
            if (!in[g]) { next = int(g); break; }
        gens.push_back(next);
        // close under products with everything already reached
        std::vector<int> frontier{next};
        in[next] = 1;
        ++count;
        while (!frontier.empty()) {
            std::vector<int> fresh;
            for (int f : frontier)
                for (std::size_t h = 0; h < n_; ++h) {
                    if (!in[h]) continue;
                    for (int p : {mul(f, int(h)), mul(int(h), f)})
                        if (!in[p]) {
                            in[p] = 1;
                            ++count;
                            fresh.push_back(p);
                        }
                }
            frontier = std::move(fresh);
        }
    }
    return gens;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (mul(int(a), int(b)) != mul(int(b), int(a))) return false;
    return true;
}

GroupPtr trivial_group() { return std::make_shared<FiniteGroup>(std::vector<int>{0}); }

GroupPtr cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
    std::vector<int> t(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b) % n;
    return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    const int na = int(a->order()), nb = int(b->order());
    const int n = na * nb;
    std::vector<int> t(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            t[std::size_t(x) * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr dihedral_group(int n) {
    if (n < 2) throw std::invalid_argument("dihedral_group: n must be >= 2");
    // elements r^i s^j, index i*2 + j; s r s^-1 = r^-1
    const int m = 2 * n;
    auto idx = [n](int i, int j) { return (i % n) * 2 + j; };
    std::vector<int> t(std::size_t(m) * m);
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 ? (i1 - i2 % n + n) % n : (i1 + i2) % n;
                    int j = (j1 + j2) % 2;
                    t[std::size_t(idx(i1, j1)) * m + idx(i2, j2)] = idx(i, j);
                }
    return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr quaternion_group() {
    // indices: 1, -1, i, -i, j, -j, k, -k
    auto neg = [](int x) { return x ^ 1; };
    auto base = [](int x) { return x >> 1; };  // 0:1 1:i 2:j 3:k
    // sign-and-result table for base units
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    // sign[a][b] of unit product e_a e_b with e = (1, i, j, k):
    // i*i = -1, i*j = k, j*i = -k, ...
    std::vector<int> t(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int bx = base(x), by = base(y);
            int r = prod[bx][by] << 1;
            int s = sign[bx][by];
            if (x & 1) s = -s;
            if (y & 1) s = -s;
            t[std::size_t(x) * 8 + y] = s > 0 ? r : neg(r);
        }
    return std::make_shared<FiniteGroup>(std::move(t));
}

std::vector<GroupPtr> groups_of_order(int n) {
    switch (n) {
        case 1: return {trivial_group()};
        case 2: return {cyclic_group(2)};
        case 4: return {cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))};
        case 8:
            return {cyclic_group(8),
                    direct_product(cyclic_group(4), cyclic_group(2)),
                    direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                   cyclic_group(2)),
                    dihedral_group(4),
                    quaternion_group()};
        default:
            throw std::invalid_argument("groups_of_order: only orders 1, 2, 4, 8 are catalogued");
    }
}

}  // namespace ct
