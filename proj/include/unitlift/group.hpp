#pragma once

#include <memory>
#include <string>
#include <vector>

namespace unitlift {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its Cayley table. Element 0 is the identity.
// Canonical element order is fixed per constructor: cyclic groups list
// powers a^0..a^(n-1); symmetric groups list permutations in lexicographic
// one-line order; direct products list pairs with the left factor major.
enum class GroupKind { Cyclic, Symmetric, Product };

class FiniteGroup {
public:
    static GroupPtr cyclic(int n);
    static GroupPtr symmetric(int n);  // n in [1, 4]
    static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

    GroupKind group_kind() const { return kind_; }
    int parameter() const { return parameter_; }                    // cyclic/symmetric n
    const std::vector<GroupPtr>& factors() const { return factors_; }  // product factors

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    bool is_abelian() const { return abelian_; }

    // Display name of element i ("1", "a^2", "perm[2,3,1]", "(a,b)").
    const std::string& element_name(int i) const { return names_[i]; }

    // Index of a permutation in one-line notation (symmetric groups only).
    int index_of_permutation(const std::vector<int>& one_line) const;

    // Short structural description, e.g. "C5", "S3", "C2xC3".
    const std::string& describe() const { return label_; }

    bool same_as(const FiniteGroup& other) const;

private:
    FiniteGroup() = default;
    void finalize();  // derives inverses/abelian flag, validates the table

    GroupKind kind_ = GroupKind::Cyclic;
    int parameter_ = 0;
    std::vector<GroupPtr> factors_;

    int order_ = 0;
    std::vector<int> table_;    // row-major order_ x order_
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    std::string label_;
    bool abelian_ = false;
    std::vector<std::vector<int>> perms_;  // one-line forms, symmetric only
};

}  // namespace unitlift
