#include "entrocone/groups.hpp"

#include <algorithm>
#include <set>

namespace entrocone {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int k : orders_) {
        if (k < 2) throw ParseError("cyclic order must be >= 2");
        if (order_ > 4096 / k) throw SizeLimit("group order capped at 4096");
        order_ *= k;
    }
}

int AbelianGroup::add(int a, int b) const {
    int out = 0, scale = 1;
    for (int k : orders_) {
        int da = a % k, db = b % k;
        a /= k;
        b /= k;
        out += ((da + db) % k) * scale;
        scale *= k;
    }
    return out;
}

int AbelianGroup::neg(int a) const {
    int out = 0, scale = 1;
    for (int k : orders_) {
        int da = a % k;
        a /= k;
        out += ((k - da) % k) * scale;
        scale *= k;
    }
    return out;
}

std::vector<int> AbelianGroup::tuple_of(int e) const {
    std::vector<int> t;
    t.reserve(orders_.size());
    for (int k : orders_) {
        t.push_back(e % k);
        e /= k;
    }
    return t;
}

int AbelianGroup::index_of(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != rank()) throw ParseError("element tuple arity mismatch");
    int out = 0, scale = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int v = tuple[i] % orders_[i];
        if (v < 0) v += orders_[i];
        out += v * scale;
        scale *= orders_[i];
    }
    return out;
}

std::string AbelianGroup::element_name(int e) const {
    std::string s = "(";
    auto t = tuple_of(e);
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

Subgroup::Subgroup(const AbelianGroup& g, std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(static_cast<size_t>(g.order()), 0);
    for (int e : elements_) member_[static_cast<size_t>(e)] = 1;
    if (elements_.empty() || elements_.front() != 0 ? !member_[0] : false) {}
    if (!member_[0]) throw ParseError("subgroup must contain the identity");
    for (int a : elements_) {
        if (!member_[static_cast<size_t>(g.neg(a))]) throw ParseError("subgroup not closed under negation");
        for (int b : elements_)
            if (!member_[static_cast<size_t>(g.add(a, b))]) throw ParseError("subgroup not closed under addition");
    }
    if (g.order() % order() != 0) throw ParseError("subgroup order does not divide group order");
}

Subgroup span(const AbelianGroup& g, const std::vector<int>& generators) {
    std::vector<char> in(static_cast<size_t>(g.order()), 0);
    std::vector<int> queue{0};
    in[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int gen : generators) {
            for (int y : {g.add(x, gen), g.add(x, g.neg(gen))}) {
                if (!in[static_cast<size_t>(y)]) {
                    in[static_cast<size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return Subgroup(g, std::move(queue));
}

Subgroup span_tuples(const AbelianGroup& g, const std::vector<std::vector<int>>& generators) {
    std::vector<int> gens;
    gens.reserve(generators.size());
    for (const auto& t : generators) gens.push_back(g.index_of(t));
    return span(g, gens);
}

Subgroup trivial_subgroup(const AbelianGroup& g) { return span(g, {}); }

Subgroup full_subgroup(const AbelianGroup& g) {
    std::vector<int> all(static_cast<size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) all[static_cast<size_t>(i)] = i;
    return Subgroup(g, std::move(all));
}

Subgroup intersect(const AbelianGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<int> elems;
    for (int e : a.elements())
        if (b.contains(e)) elems.push_back(e);
    return Subgroup(g, std::move(elems));
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g) {
    // Closure of the singleton spans under pairwise joins.
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto push = [&](const Subgroup& s) {
        if (seen.insert(s.elements()).second) out.push_back(s);
    };
    push(trivial_subgroup(g));
    for (int e = 1; e < g.order(); ++e) push(span(g, {e}));
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            std::vector<int> gens = out[i].elements();
            gens.insert(gens.end(), out[j].elements().begin(), out[j].elements().end());
            push(span(g, gens));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

GroupDiagram::GroupDiagram(Shape s, AbelianGroup g, std::vector<Subgroup> subs)
    : shape(std::move(s)), group(std::move(g)), subgroup_at(std::move(subs)) {
    if (static_cast<int>(subgroup_at.size()) != shape->size())
        throw ShapeMismatch("subgroup count does not match shape");
    for (int i = 0; i < shape->size(); ++i)
        for (int j = 0; j < shape->size(); ++j) {
            if (i == j || !shape->is_ancestor(i, j)) continue;
            for (int e : subgroup_at[static_cast<size_t>(i)].elements())
                if (!subgroup_at[static_cast<size_t>(j)].contains(e))
                    throw ShapeMismatch("subgroup at " + shape->object(i) +
                                        " not contained in subgroup at " + shape->object(j));
        }
}

GroupDiagram minimal_group_diagram(const AbelianGroup& g, const std::vector<Subgroup>& terminals) {
    int n = static_cast<int>(terminals.size());
    if (n < 1 || n > 6) throw SizeLimit("minimal group diagrams support 1 <= n <= 6");
    Shape shape = lambda_shape(n);
    std::vector<Subgroup> subs(static_cast<size_t>(shape->size()));
    for (int o = 0; o < shape->size(); ++o) {
        Subgroup acc = full_subgroup(g);
        for (char c : shape->object(o)) acc = intersect(g, acc, terminals[static_cast<size_t>(c - '1')]);
        subs[static_cast<size_t>(o)] = std::move(acc);
    }
    return GroupDiagram(shape, g, std::move(subs));
}

Diagram realize(const GroupDiagram& gd) {
    const AbelianGroup& g = gd.group;
    if (g.order() > 4096) throw SizeLimit("realization capped at group order 4096");

    // coset_rep[o][e] = minimal element of e + H_o; atoms ordered by rep.
    const int nobj = gd.shape->size();
    std::vector<std::vector<int>> atom_of(static_cast<size_t>(nobj),
                                          std::vector<int>(static_cast<size_t>(g.order()), -1));
    std::vector<Space> spaces;
    for (int o = 0; o < nobj; ++o) {
        const Subgroup& h = gd.subgroup_at[static_cast<size_t>(o)];
        std::vector<Atom> atoms;
        Rational w = ratio(h.order(), g.order());
        for (int e = 0; e < g.order(); ++e) {
            if (atom_of[static_cast<size_t>(o)][static_cast<size_t>(e)] >= 0) continue;
            int idx = static_cast<int>(atoms.size());
            int rep = -1;
            for (int x : h.elements()) {
                int y = g.add(e, x);
                atom_of[static_cast<size_t>(o)][static_cast<size_t>(y)] = idx;
                if (rep < 0 || y < rep) rep = y;
            }
            atoms.push_back({g.element_name(rep) + "+H", w});
        }
        spaces.emplace_back(std::move(atoms));
    }

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : gd.shape->covering_arrows()) {
        std::vector<int> m(static_cast<size_t>(spaces[static_cast<size_t>(i)].size()), -1);
        for (int e = 0; e < g.order(); ++e)
            m[static_cast<size_t>(atom_of[static_cast<size_t>(i)][static_cast<size_t>(e)])] =
                atom_of[static_cast<size_t>(j)][static_cast<size_t>(e)];
        maps[{i, j}] = std::move(m);
    }
    return Diagram(gd.shape, std::move(spaces), maps);
}

EntropyVector exact_entropy_vector(const GroupDiagram& gd, const LogBase& base) {
    std::vector<Scalar> values;
    values.reserve(static_cast<size_t>(gd.shape->size()));
    for (int o = 0; o < gd.shape->size(); ++o) {
        long index = gd.group.order() / gd.subgroup_at[static_cast<size_t>(o)].order();
        if (base.is_natural()) {
            values.push_back(index == 1 ? Scalar(Rational(0))
                                        : Scalar::approximate(std::log(static_cast<double>(index))));
            continue;
        }
        auto k = exact_power_exponent(base.value(), Rational(index));
        if (k)
            values.push_back(Scalar(Rational(*k)));
        else
            values.push_back(Scalar::approximate(std::log(static_cast<double>(index)) / base.ln()));
    }
    return EntropyVector(gd.shape, std::move(values));
}

int pairing_sign(const GroupDiagram& gd, const InfoVector& v) {
    if (!same_shape(gd.shape, v.shape)) throw ShapeMismatch("pairing over different shapes");
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [o, c] : v.coeff) {
        long index = gd.group.order() / gd.subgroup_at[static_cast<size_t>(o)].order();
        terms.emplace_back(c, Rational(index));
    }
    return sign_of_log_combination(terms);
}

} // namespace entrocone
