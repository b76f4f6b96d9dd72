#include "entrocone/indexing.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace entrocone {

int IndexingCategory::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownLabel("object '" + id + "' not in category");
    return it->second;
}

IndexingCategory IndexingCategory::validate(
    const std::vector<std::string>& objects,
    const std::vector<std::pair<std::string, std::string>>& arrows) {
    if (static_cast<int>(objects.size()) > kMaxObjects)
        throw SizeLimit("more than 255 objects");

    IndexingCategory cat;
    cat.objects_ = objects;
    for (int i = 0; i < cat.size(); ++i) {
        if (!cat.index_.emplace(objects[static_cast<size_t>(i)], i).second)
            throw ParseError("duplicate object id '" + objects[static_cast<size_t>(i)] + "'");
    }

    const size_t n = objects.size();
    cat.anc_.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) cat.anc_[i * n + i] = 1;
    for (const auto& [a, b] : arrows) {
        int i = cat.index_of(a);
        int j = cat.index_of(b);
        cat.anc_[cat.idx(i, j)] = 1;
    }

    // Reflexive-transitive closure (Floyd-Warshall on booleans).
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            if (!cat.anc_[i * n + k]) continue;
            for (size_t j = 0; j < n; ++j)
                if (cat.anc_[k * n + j]) cat.anc_[i * n + j] = 1;
        }

    // Antisymmetry: mutual ancestry between distinct objects is a cycle.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (cat.anc_[i * n + j] && cat.anc_[j * n + i])
                throw NotAPoset("antisymmetry fails for (" + objects[i] + ", " + objects[j] + ")");

    // Initial object: ancestor of everything.
    cat.initial_ = -1;
    for (size_t i = 0; i < n && cat.initial_ < 0; ++i) {
        bool all = true;
        for (size_t j = 0; j < n; ++j) all = all && cat.anc_[i * n + j];
        if (all) cat.initial_ = static_cast<int>(i);
    }
    if (cat.initial_ < 0) throw NoInitialObject("no object is an ancestor of all others");

    // Minimal common ancestors for every pair.
    cat.mca_.assign(n * n, -1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            std::vector<int> common;
            for (size_t k = 0; k < n; ++k)
                if (cat.anc_[k * n + i] && cat.anc_[k * n + j]) common.push_back(static_cast<int>(k));
            int m = common.front();
            for (int c : common)
                if (cat.anc_[cat.idx(m, c)]) m = c;
            for (int c : common)
                if (!cat.anc_[cat.idx(c, m)])
                    throw NoMinimalCommonAncestor("objects (" + objects[i] + ", " + objects[j] +
                                                  ") have no minimal common ancestor");
            cat.mca_[i * n + j] = m;
            cat.mca_[j * n + i] = m;
        }
    }
    return cat;
}

namespace {

std::vector<std::string> lambda_object_names(int n) {
    // Nonempty subsets of {1..n}, ordered by cardinality then lexicographically.
    std::vector<std::string> names;
    for (int size = 1; size <= n; ++size) {
        std::vector<std::string> layer;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            std::string s;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) s += static_cast<char>('1' + b);
            layer.push_back(s);
        }
        std::sort(layer.begin(), layer.end());
        names.insert(names.end(), layer.begin(), layer.end());
    }
    return names;
}

bool subset_contains(const std::string& big, const std::string& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

IndexingCategory IndexingCategory::lambda(int n) {
    if (n < 1 || n > 8) throw SizeLimit("lambda(n) requires 1 <= n <= 8");
    auto names = lambda_object_names(n);
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : names)
        for (const auto& b : names)
            if (a != b && subset_contains(a, b)) arrows.emplace_back(a, b);
    return validate(names, arrows);
}

bool IndexingCategory::is_terminal(int i) const {
    for (int j = 0; j < size(); ++j)
        if (j != i && is_ancestor(i, j)) return false;
    return true;
}

std::vector<int> IndexingCategory::terminal_objects() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (is_terminal(i)) out.push_back(i);
    return out;
}

IndexingCategory IndexingCategory::ideal(int i) const {
    std::vector<std::string> objs;
    for (int j = 0; j < size(); ++j)
        if (is_ancestor(i, j)) objs.push_back(object(j));
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : objs)
        for (const auto& b : objs) {
            int ia = index_of(a), ib = index_of(b);
            if (ia != ib && is_ancestor(ia, ib)) arrows.emplace_back(a, b);
        }
    return validate(objs, arrows);
}

std::vector<std::pair<int, int>> IndexingCategory::covering_arrows() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == j || !is_ancestor(i, j)) continue;
            bool covering = true;
            for (int k = 0; k < size() && covering; ++k)
                if (k != i && k != j && is_ancestor(i, k) && is_ancestor(k, j)) covering = false;
            if (covering) out.emplace_back(i, j);
        }
    return out;
}

bool IndexingCategory::same_shape(const IndexingCategory& other) const {
    return objects_ == other.objects_ && anc_ == other.anc_;
}

Shape make_shape(IndexingCategory cat) {
    return std::make_shared<const IndexingCategory>(std::move(cat));
}

Shape lambda_shape(int n) {
    static std::mutex mu;
    static std::map<int, Shape> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Shape s = make_shape(IndexingCategory::lambda(n));
    cache[n] = s;
    return s;
}

std::optional<int> lambda_n_of(const IndexingCategory& shape) {
    for (int n = 1; n <= 8; ++n) {
        if (shape.size() != (1 << n) - 1) continue;
        if (shape.same_shape(*lambda_shape(n))) return n;
    }
    return std::nullopt;
}

bool same_shape(const Shape& a, const Shape& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_shape(*b);
}

} // namespace entrocone
