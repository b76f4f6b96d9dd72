#include "entrocone/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace entrocone {

namespace {

Scalar abs_scalar(const Scalar& s) {
    if (s.is_exact()) return Scalar(abs(s.exact()));
    return Scalar::approximate(std::abs(s.value()));
}

} // namespace

Scalar kd(const TwoFanOfDiagrams& fan, const LogBase& base) {
    Scalar l1, simplified;
    for (int o = 0; o < fan.apex().shape()->size(); ++o) {
        Scalar hz = entropy(fan.apex().space_at(o), base);
        Scalar hx = entropy(fan.left().space_at(o), base);
        Scalar hy = entropy(fan.right().space_at(o), base);
        l1 += abs_scalar(hz - hx) + abs_scalar(hz - hy);
        simplified += (hz - hx) + (hz - hy);
    }
    if (std::abs(l1.value() - simplified.value()) > 1e-9)
        throw Error("Internal", "kd forms disagree: apex fails to dominate a foot");
    return l1;
}

Coupling induce(const Diagram& left, const Diagram& right,
                const std::vector<std::tuple<int, int, Rational>>& joint) {
    if (!same_shape(left.shape(), right.shape()))
        throw ShapeMismatch("coupling requires diagrams over the same shape");
    const Shape& shape = left.shape();
    const int init = left.initial();
    const Space& l0 = left.space_at(init);
    const Space& r0 = right.space_at(init);

    std::vector<Rational> row(static_cast<size_t>(l0.size()), Rational(0));
    std::vector<Rational> col(static_cast<size_t>(r0.size()), Rational(0));
    std::vector<std::tuple<int, int, Rational>> support;
    for (const auto& [a, b, w] : joint) {
        if (w < 0) throw MarginalMismatch("negative weight in joint");
        if (w == 0) continue;
        if (a < 0 || a >= l0.size() || b < 0 || b >= r0.size())
            throw MarginalMismatch("joint cell out of range");
        row[static_cast<size_t>(a)] += w;
        col[static_cast<size_t>(b)] += w;
        support.emplace_back(a, b, w);
    }
    for (int a = 0; a < l0.size(); ++a)
        if (row[static_cast<size_t>(a)] != l0.atom(a).weight)
            throw MarginalMismatch("left marginal mismatch at atom '" + l0.atom(a).label + "'");
    for (int b = 0; b < r0.size(); ++b)
        if (col[static_cast<size_t>(b)] != r0.atom(b).weight)
            throw MarginalMismatch("right marginal mismatch at atom '" + r0.atom(b).label + "'");
    std::sort(support.begin(), support.end(),
              [](const auto& x, const auto& y) {
                  return std::pair(std::get<0>(x), std::get<1>(x)) < std::pair(std::get<0>(y), std::get<1>(y));
              });

    // Apex at each object: the joint image distribution under the pair of
    // composites, which is already the minimized fan apex.
    const int n = shape->size();
    std::vector<Space> spaces;
    std::vector<std::vector<int>> to_left(static_cast<size_t>(n)), to_right(static_cast<size_t>(n));
    std::vector<std::vector<int>> cell_atom(static_cast<size_t>(n),
                                            std::vector<int>(support.size(), -1));
    for (int o = 0; o < n; ++o) {
        const auto& ml = left.map(init, o);
        const auto& mr = right.map(init, o);
        std::map<std::pair<int, int>, int> seen;
        std::vector<Atom> atoms;
        for (size_t cidx = 0; cidx < support.size(); ++cidx) {
            auto [a, b, w] = support[cidx];
            std::pair<int, int> key{ml[static_cast<size_t>(a)], mr[static_cast<size_t>(b)]};
            auto it = seen.find(key);
            if (it == seen.end()) {
                it = seen.emplace(key, static_cast<int>(atoms.size())).first;
                atoms.push_back({"(" + left.space_at(o).atom(key.first).label + "," +
                                     right.space_at(o).atom(key.second).label + ")",
                                 Rational(0)});
                to_left[static_cast<size_t>(o)].push_back(key.first);
                to_right[static_cast<size_t>(o)].push_back(key.second);
            }
            atoms[static_cast<size_t>(it->second)].weight += w;
            cell_atom[static_cast<size_t>(o)][cidx] = it->second;
        }
        spaces.emplace_back(std::move(atoms));
    }

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : shape->covering_arrows()) {
        std::vector<int> m(static_cast<size_t>(spaces[static_cast<size_t>(i)].size()), -1);
        for (size_t cidx = 0; cidx < support.size(); ++cidx)
            m[static_cast<size_t>(cell_atom[static_cast<size_t>(i)][cidx])] =
                cell_atom[static_cast<size_t>(j)][cidx];
        maps[{i, j}] = std::move(m);
    }
    Diagram apex(shape, std::move(spaces), maps);
    TwoFanOfDiagrams fan(std::move(apex), left, right, std::move(to_left), std::move(to_right));
    return Coupling{left, right, std::move(support), std::move(fan)};
}

namespace {

// All vertices of the transportation polytope with the given margins, by
// exact flow solves over the spanning trees of the complete bipartite
// support graph. Trees with negative solutions are infeasible; distinct
// trees can give the same (degenerate) vertex, so results are deduplicated.
class TransportVertexEnumerator {
public:
    TransportVertexEnumerator(std::vector<Rational> rows, std::vector<Rational> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)),
          m_(static_cast<int>(rows_.size())), n_(static_cast<int>(cols_.size())) {
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < n_; ++b) edges_.emplace_back(a, m_ + b);
    }

    std::vector<std::vector<std::tuple<int, int, Rational>>> run() {
        parent_.resize(static_cast<size_t>(m_ + n_));
        for (int v = 0; v < m_ + n_; ++v) parent_[static_cast<size_t>(v)] = v;
        chosen_.clear();
        recurse(0, m_ + n_ - 1);
        std::vector<std::vector<std::tuple<int, int, Rational>>> out(vertices_.begin(), vertices_.end());
        return out;
    }

private:
    int find(std::vector<int>& p, int v) const {
        while (p[static_cast<size_t>(v)] != v) v = p[static_cast<size_t>(v)] = p[static_cast<size_t>(p[static_cast<size_t>(v)])];
        return v;
    }

    // Remaining edges must still be able to connect what is disconnected.
    bool can_complete(size_t next_edge, int needed) const {
        if (needed == 0) return true;
        if (static_cast<int>(edges_.size() - next_edge) < needed) return false;
        std::vector<int> p = parent_;
        int merges = 0;
        for (size_t e = next_edge; e < edges_.size() && merges < needed; ++e) {
            int a = find(p, edges_[e].first), b = find(p, edges_[e].second);
            if (a != b) {
                p[static_cast<size_t>(a)] = b;
                ++merges;
            }
        }
        return merges >= needed;
    }

    void recurse(size_t next_edge, int needed) {
        if (needed == 0) {
            solve_tree();
            return;
        }
        if (!can_complete(next_edge, needed)) return;
        const auto& [u, v] = edges_[next_edge];
        std::vector<int> saved = parent_;
        int ru = find(parent_, u), rv = find(parent_, v);
        if (ru != rv) {
            parent_[static_cast<size_t>(ru)] = rv;
            chosen_.push_back(next_edge);
            recurse(next_edge + 1, needed - 1);
            chosen_.pop_back();
            parent_ = saved;
        }
        recurse(next_edge + 1, needed);
    }

    void solve_tree() {
        // Strip leaves; each leaf pins the flow on its unique edge.
        std::vector<Rational> excess(static_cast<size_t>(m_ + n_));
        for (int a = 0; a < m_; ++a) excess[static_cast<size_t>(a)] = rows_[static_cast<size_t>(a)];
        for (int b = 0; b < n_; ++b) excess[static_cast<size_t>(m_ + b)] = cols_[static_cast<size_t>(b)];

        std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(m_ + n_));
        for (size_t e : chosen_) {
            adj[static_cast<size_t>(edges_[e].first)].emplace_back(edges_[e].second, e);
            adj[static_cast<size_t>(edges_[e].second)].emplace_back(edges_[e].first, e);
        }
        std::vector<int> degree(static_cast<size_t>(m_ + n_));
        for (int v = 0; v < m_ + n_; ++v) degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        std::vector<char> removed_edge(edges_.size(), 0);
        std::vector<char> removed_node(static_cast<size_t>(m_ + n_), 0);
        std::vector<int> stack;
        for (int v = 0; v < m_ + n_; ++v)
            if (degree[static_cast<size_t>(v)] == 1) stack.push_back(v);

        std::vector<std::pair<size_t, Rational>> flows;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (removed_node[static_cast<size_t>(v)] || degree[static_cast<size_t>(v)] != 1) continue;
            for (const auto& [w, e] : adj[static_cast<size_t>(v)]) {
                if (removed_edge[e] || removed_node[static_cast<size_t>(w)]) continue;
                Rational f = excess[static_cast<size_t>(v)];
                if (f < 0) return; // infeasible tree
                flows.emplace_back(e, f);
                excess[static_cast<size_t>(v)] = 0;
                excess[static_cast<size_t>(w)] -= f;
                removed_edge[e] = 1;
                removed_node[static_cast<size_t>(v)] = 1;
                if (--degree[static_cast<size_t>(w)] == 1) stack.push_back(w);
                break;
            }
        }
        std::vector<std::tuple<int, int, Rational>> vertex;
        for (const auto& [e, f] : flows) {
            if (f == 0) continue;
            vertex.emplace_back(edges_[e].first, edges_[e].second - m_, f);
        }
        std::sort(vertex.begin(), vertex.end(), [](const auto& x, const auto& y) {
            return std::pair(std::get<0>(x), std::get<1>(x)) < std::pair(std::get<0>(y), std::get<1>(y));
        });
        vertices_.insert(std::move(vertex));
    }

    std::vector<Rational> rows_, cols_;
    int m_, n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> parent_;
    std::vector<size_t> chosen_;
    std::set<std::vector<std::tuple<int, int, Rational>>> vertices_;
};

} // namespace

IkdResult ikd_exact(const Diagram& left, const Diagram& right, const LogBase& base) {
    if (!same_shape(left.shape(), right.shape()))
        throw ShapeMismatch("ikd requires diagrams over the same shape");
    const Space& l0 = left.space_at(left.initial());
    const Space& r0 = right.space_at(right.initial());
    if (l0.size() * r0.size() > 30)
        throw SizeLimit("exact ikd capped at 30 joint cells");

    std::vector<Rational> rows, cols;
    for (int a = 0; a < l0.size(); ++a) rows.push_back(l0.atom(a).weight);
    for (int b = 0; b < r0.size(); ++b) cols.push_back(r0.atom(b).weight);
    TransportVertexEnumerator enumerator(std::move(rows), std::move(cols));
    auto vertices = enumerator.run();

    IkdResult best;
    bool first = true;
    for (const auto& vertex : vertices) {
        Coupling c = induce(left, right, vertex);
        Scalar value = kd(c.fan, base);
        if (first || value.value() < best.value) {
            best.value = value.value();
            best.scalar_value = value;
            best.joint = vertex;
            first = false;
        }
    }
    best.vertices_enumerated = static_cast<long>(vertices.size());
    return best;
}

IkdResult ikd_greedy(const Diagram& left, const Diagram& right, const LogBase& base) {
    if (!same_shape(left.shape(), right.shape()))
        throw ShapeMismatch("ikd requires diagrams over the same shape");
    const Space& l0 = left.space_at(left.initial());
    const Space& r0 = right.space_at(right.initial());

    std::vector<Rational> row, col;
    for (int a = 0; a < l0.size(); ++a) row.push_back(l0.atom(a).weight);
    for (int b = 0; b < r0.size(); ++b) col.push_back(r0.atom(b).weight);

    auto argmax = [](const std::vector<Rational>& mass, const Space& space) {
        int best = -1;
        for (int i = 0; i < static_cast<int>(mass.size()); ++i) {
            if (mass[static_cast<size_t>(i)] == 0) continue;
            if (best < 0 || mass[static_cast<size_t>(i)] > mass[static_cast<size_t>(best)] ||
                (mass[static_cast<size_t>(i)] == mass[static_cast<size_t>(best)] &&
                 space.atom(i).label < space.atom(best).label))
                best = i;
        }
        return best;
    };

    std::vector<std::tuple<int, int, Rational>> joint;
    while (true) {
        int a = argmax(row, l0);
        int b = argmax(col, r0);
        if (a < 0 || b < 0) break;
        Rational w = std::min(row[static_cast<size_t>(a)], col[static_cast<size_t>(b)]);
        joint.emplace_back(a, b, w);
        row[static_cast<size_t>(a)] -= w;
        col[static_cast<size_t>(b)] -= w;
    }
    Coupling c = induce(left, right, joint);
    Scalar value = kd(c.fan, base);
    IkdResult out;
    out.value = value.value();
    out.scalar_value = value;
    out.joint = std::move(joint);
    return out;
}

Diagram diagram_power(const Diagram& d, int n) {
    if (n < 1) throw SizeLimit("diagram power requires n >= 1");
    double atoms = 1.0;
    for (int i = 0; i < n; ++i) {
        atoms *= d.space_at(d.initial()).size();
        if (atoms > 1e6) throw SizeLimit("diagram power exceeds 1e6 atoms");
    }
    Diagram acc = d;
    for (int i = 1; i < n; ++i) acc = tensor_diagrams(acc, d);
    return acc;
}

AikdEstimate aikd_upper(const Diagram& left, const Diagram& right, const LogBase& base, int n_max) {
    if (n_max < 1 || n_max > 6) throw SizeLimit("aikd estimator supports 1 <= n_max <= 6");
    AikdEstimate est;
    for (int n = 1; n <= n_max; ++n) {
        IkdResult r = ikd_greedy(diagram_power(left, n), diagram_power(right, n), base);
        double u = r.value / n;
        est.raw.push_back(u);
        est.envelope.push_back(est.envelope.empty() ? u : std::min(est.envelope.back(), u));
    }
    return est;
}

} // namespace entrocone
