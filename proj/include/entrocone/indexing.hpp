#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entrocone/errors.hpp"

namespace entrocone {

struct Fan {
    int apex = -1;
    int left = -1;
    int right = -1;
    bool operator==(const Fan&) const = default;
};

// A finite poset with minimal common ancestors and an initial object;
// "i is an ancestor of j" means there is a morphism i -> j. Immutable after
// validation, so instances can be shared freely across threads.
class IndexingCategory {
public:
    static constexpr int kMaxObjects = 255;

    // Accepts any generating arrow set (covering relations or more), applies
    // the reflexive-transitive closure, then checks the axioms in order:
    // antisymmetry (NotAPoset), initial object (NoInitialObject), minimal
    // common ancestors (NoMinimalCommonAncestor).
    static IndexingCategory validate(const std::vector<std::string>& objects,
                                     const std::vector<std::pair<std::string, std::string>>& arrows);

    // Poset of nonempty subsets of {1..n} ordered by reverse inclusion;
    // object names are increasing digit strings ("134"). 1 <= n <= 8.
    static IndexingCategory lambda(int n);

    int size() const { return static_cast<int>(objects_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::string& object(int i) const { return objects_[static_cast<size_t>(i)]; }
    int index_of(const std::string& id) const;
    bool has_object(const std::string& id) const { return index_.count(id) > 0; }

    bool is_ancestor(int i, int j) const { return anc_[idx(i, j)] != 0; }
    int minimal_common_ancestor(int i, int j) const { return mca_[idx(i, j)]; }
    Fan minimal_fan(int i, int j) const { return Fan{minimal_common_ancestor(i, j), i, j}; }
    int initial_object() const { return initial_; }
    bool is_terminal(int i) const;
    std::vector<int> terminal_objects() const;

    // Full subcategory on i and all of its descendants.
    IndexingCategory ideal(int i) const;

    // Arrows i -> j with nothing strictly between; a generating set.
    std::vector<std::pair<int, int>> covering_arrows() const;

    bool same_shape(const IndexingCategory& other) const;

private:
    IndexingCategory() = default;
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * objects_.size() + static_cast<size_t>(j); }

    std::vector<std::string> objects_;
    std::unordered_map<std::string, int> index_;
    std::vector<unsigned char> anc_; // reflexive-transitive ancestry matrix
    std::vector<int> mca_;
    int initial_ = -1;
};

using Shape = std::shared_ptr<const IndexingCategory>;

Shape make_shape(IndexingCategory cat);

// Cached Λn shapes (immutable, shared).
Shape lambda_shape(int n);

// Detects whether `shape` is structurally the Λn poset with canonical digit
// names; returns n if so.
std::optional<int> lambda_n_of(const IndexingCategory& shape);

bool same_shape(const Shape& a, const Shape& b);

} // namespace entrocone
