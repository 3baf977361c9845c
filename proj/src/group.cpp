#include "unitlift/group.hpp"

#include <algorithm>
#include <numeric>

#include "unitlift/error.hpp"

namespace unitlift {

namespace {
constexpr int kMaxOrder = 1024;           // Cayley table size guard
constexpr int kAssociativityCheckCap = 24;  // exhaustive check bound
}  // namespace

void FiniteGroup::finalize() {
    const int n = order_;
    if (n < 1 || n > kMaxOrder) throw ValidationError("group order out of range");
    // Latin square with identity row/column 0.
    for (int i = 0; i < n; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i)
            throw ValidationError("group table: element 0 is not an identity");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            int r = mul(i, j), c = mul(j, i);
            if (r < 0 || r >= n || c < 0 || c >= n)
                throw ValidationError("group table entry out of range");
            if (seen_row[r] || seen_col[c])
                throw ValidationError("group table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    if (n <= kAssociativityCheckCap) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw ValidationError("group table is not associative");
    }
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0) throw ValidationError("group element has no inverse");
    }
    abelian_ = true;
    for (int a = 0; a < n && abelian_; ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }
    if (names_.empty()) {
        names_.resize(n);
        for (int i = 0; i < n; ++i) names_[i] = "g" + std::to_string(i);
    }
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1) throw ValidationError("cyclic group order must be >= 1");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::Cyclic;
    g->parameter_ = n;
    g->order_ = n;
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g->table_[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    g->names_.resize(n);
    for (int i = 0; i < n; ++i)
        g->names_[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    g->label_ = "C" + std::to_string(n);
    g->finalize();
    return g;
}

GroupPtr FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) throw ValidationError("symmetric group supported for n in [1,4]");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::Symmetric;
    g->parameter_ = n;
    const int m = static_cast<int>(perms.size());
    g->order_ = m;
    g->perms_ = perms;
    g->table_.resize(static_cast<std::size_t>(m) * m);
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = a[b[i] - 1];
        return c;
    };
    auto index_of = [&](const std::vector<int>& q) {
        auto it = std::lower_bound(perms.begin(), perms.end(), q);
        return static_cast<int>(it - perms.begin());
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g->table_[static_cast<std::size_t>(i) * m + j] = index_of(compose(perms[i], perms[j]));
    g->names_.resize(m);
    for (int i = 0; i < m; ++i) {
        std::string s = "perm[";
        for (int v : perms[i]) s += std::to_string(v);
        s += "]";
        g->names_[i] = s;
    }
    g->label_ = "S" + std::to_string(n);
    g->finalize();
    return g;
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
    if (!a || !b) throw ValidationError("direct_product: null factor");
    const int na = a->order(), nb = b->order();
    if (static_cast<long long>(na) * nb > kMaxOrder)
        throw ValidationError("direct product order exceeds the table cap");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = GroupKind::Product;
    g->factors_ = {a, b};
    const int n = na * nb;
    g->order_ = n;
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        int ia = i / nb, ib = i % nb;
        for (int j = 0; j < n; ++j) {
            int ja = j / nb, jb = j % nb;
            g->table_[static_cast<std::size_t>(i) * n + j] = a->mul(ia, ja) * nb + b->mul(ib, jb);
        }
    }
    g->names_.resize(n);
    for (int i = 0; i < n; ++i)
        g->names_[i] = "(" + a->element_name(i / nb) + "," + b->element_name(i % nb) + ")";
    g->label_ = a->label_ + "x" + b->label_;
    g->finalize();
    return g;
}

int FiniteGroup::index_of_permutation(const std::vector<int>& one_line) const {
    if (perms_.empty()) throw UnsupportedError("index_of_permutation: not a symmetric group");
    auto it = std::lower_bound(perms_.begin(), perms_.end(), one_line);
    if (it == perms_.end() || *it != one_line)
        throw ValidationError("index_of_permutation: not a permutation of this group");
    return static_cast<int>(it - perms_.begin());
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
}

}  // namespace unitlift
