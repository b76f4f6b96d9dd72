#include "entrocone/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace entrocone {

namespace {

std::vector<int> identity_map(int n) {
    std::vector<int> m(static_cast<size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return m;
}

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& then) {
    std::vector<int> out(first.size());
    for (size_t i = 0; i < first.size(); ++i) out[i] = then[static_cast<size_t>(first[i])];
    return out;
}

} // namespace

Diagram::Diagram(Shape shape, std::vector<Space> spaces,
                 const std::map<std::pair<int, int>, std::vector<int>>& arrow_maps)
    : shape_(std::move(shape)), spaces_(std::move(spaces)) {
    const int n = shape_->size();
    if (static_cast<int>(spaces_.size()) != n)
        throw ShapeMismatch("space count does not match shape");

    maps_.assign(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) maps_[static_cast<size_t>(i)][static_cast<size_t>(i)] = identity_map(space_at(i).size());

    for (const auto& [arrow, m] : arrow_maps) {
        auto [i, j] = arrow;
        if (i == j) continue;
        if (!shape_->is_ancestor(i, j))
            throw ShapeMismatch("arrow (" + shape_->object(i) + " -> " + shape_->object(j) +
                                ") not in the category");
        validate_reduction_indices(space_at(i), space_at(j), m);
        maps_[static_cast<size_t>(i)][static_cast<size_t>(j)] = m;
    }

    // Fill in composites until the full relation is covered.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j || !shape_->is_ancestor(i, j)) continue;
                if (!maps_[static_cast<size_t>(i)][static_cast<size_t>(j)].empty() || space_at(i).size() == 0) continue;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (!shape_->is_ancestor(i, k) || !shape_->is_ancestor(k, j)) continue;
                    const auto& a = maps_[static_cast<size_t>(i)][static_cast<size_t>(k)];
                    const auto& b = maps_[static_cast<size_t>(k)][static_cast<size_t>(j)];
                    if (a.empty() || b.empty()) continue;
                    maps_[static_cast<size_t>(i)][static_cast<size_t>(j)] = compose(a, b);
                    changed = true;
                    break;
                }
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !shape_->is_ancestor(i, j)) continue;
            if (maps_[static_cast<size_t>(i)][static_cast<size_t>(j)].empty() && space_at(i).size() > 0)
                throw ShapeMismatch("no map derivable for arrow (" + shape_->object(i) + " -> " +
                                    shape_->object(j) + ")");
            validate_reduction_indices(space_at(i), space_at(j),
                                       maps_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }

    // Path independence: checking every covering first step against the
    // stored composite makes all longer paths agree by induction.
    for (const auto& [a, c] : shape_->covering_arrows()) {
        for (int j = 0; j < n; ++j) {
            if (!shape_->is_ancestor(c, j)) continue;
            auto through = compose(map(a, c), map(c, j));
            if (through != map(a, j))
                throw NotMeasurePreserving("diagram does not commute: paths " + shape_->object(a) +
                                           " -> " + shape_->object(j) + " disagree");
        }
    }
}

const std::vector<int>& Diagram::map(int i, int j) const {
    if (!shape_->is_ancestor(i, j))
        throw ShapeMismatch("no arrow (" + shape_->object(i) + " -> " + shape_->object(j) + ")");
    return maps_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

bool Diagram::arrow_is_isomorphism(int i, int j) const {
    const auto& m = map(i, j);
    if (space_at(i).size() != space_at(j).size()) return false;
    std::vector<char> hit(static_cast<size_t>(space_at(j).size()), 0);
    for (int s = 0; s < space_at(i).size(); ++s) {
        int t = m[static_cast<size_t>(s)];
        if (hit[static_cast<size_t>(t)]) return false;
        hit[static_cast<size_t>(t)] = 1;
        if (space_at(i).atom(s).weight != space_at(j).atom(t).weight) return false;
    }
    return true;
}

EntropyVector entropy_vector(const Diagram& d, const LogBase& base) {
    std::vector<Scalar> values;
    values.reserve(static_cast<size_t>(d.shape()->size()));
    for (int i = 0; i < d.shape()->size(); ++i) values.push_back(entropy(d.space_at(i), base));
    return EntropyVector(d.shape(), std::move(values));
}

Diagram tensor_diagrams(const Diagram& x, const Diagram& y) {
    if (!same_shape(x.shape(), y.shape())) throw ShapeMismatch("tensor of diagrams over different shapes");
    const int n = x.shape()->size();
    std::vector<Space> spaces;
    spaces.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) spaces.push_back(tensor(x.space_at(i), y.space_at(i)));

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : x.shape()->covering_arrows()) {
        const auto& mx = x.map(i, j);
        const auto& my = y.map(i, j);
        int yi = y.space_at(i).size(), yj = y.space_at(j).size();
        std::vector<int> m(static_cast<size_t>(x.space_at(i).size()) * static_cast<size_t>(yi));
        for (int a = 0; a < x.space_at(i).size(); ++a)
            for (int b = 0; b < yi; ++b)
                m[static_cast<size_t>(a * yi + b)] = mx[static_cast<size_t>(a)] * yj + my[static_cast<size_t>(b)];
        maps[{i, j}] = std::move(m);
    }
    return Diagram(x.shape(), std::move(spaces), maps);
}

Diagram condition(const Diagram& d, int u_obj, const std::string& atom_label) {
    int u = d.space_at(u_obj).find(atom_label);
    if (u < 0) throw ZeroWeightAtom("atom '" + atom_label + "' has no positive weight at object " +
                                    d.shape()->object(u_obj));
    const int n = d.shape()->size();
    const int init = d.initial();
    const Space& x0 = d.space_at(init);
    const auto& to_u = d.map(init, u_obj);
    Rational mass = d.space_at(u_obj).atom(u).weight;

    std::vector<int> fiber;
    for (int x = 0; x < x0.size(); ++x)
        if (to_u[static_cast<size_t>(x)] == u) fiber.push_back(x);

    // Pushforward of the renormalized fiber measure through each composite.
    std::vector<Space> spaces;
    std::vector<std::vector<int>> survive(static_cast<size_t>(n)); // old atom -> new index or -1
    for (int j = 0; j < n; ++j) {
        const Space& xj = d.space_at(j);
        const auto& m = d.map(init, j);
        std::vector<Rational> w(static_cast<size_t>(xj.size()), Rational(0));
        for (int x : fiber) w[static_cast<size_t>(m[static_cast<size_t>(x)])] += x0.atom(x).weight / mass;
        std::vector<Atom> atoms;
        survive[static_cast<size_t>(j)].assign(static_cast<size_t>(xj.size()), -1);
        for (int a = 0; a < xj.size(); ++a) {
            if (w[static_cast<size_t>(a)] == 0) continue;
            survive[static_cast<size_t>(j)][static_cast<size_t>(a)] = static_cast<int>(atoms.size());
            atoms.push_back({xj.atom(a).label, w[static_cast<size_t>(a)]});
        }
        spaces.emplace_back(std::move(atoms));
    }

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : d.shape()->covering_arrows()) {
        const auto& old_map = d.map(i, j);
        std::vector<int> m(static_cast<size_t>(spaces[static_cast<size_t>(i)].size()));
        for (int a = 0; a < d.space_at(i).size(); ++a) {
            int na = survive[static_cast<size_t>(i)][static_cast<size_t>(a)];
            if (na < 0) continue;
            m[static_cast<size_t>(na)] = survive[static_cast<size_t>(j)][static_cast<size_t>(old_map[static_cast<size_t>(a)])];
        }
        maps[{i, j}] = std::move(m);
    }
    return Diagram(d.shape(), std::move(spaces), maps);
}

EntropyVector conditional_entropy_vector(const Diagram& d, int u_obj, const LogBase& base) {
    EntropyVector acc = EntropyVector::zero(d.shape());
    const Space& u_space = d.space_at(u_obj);
    for (int u = 0; u < u_space.size(); ++u) {
        EntropyVector part = entropy_vector(condition(d, u_obj, u_space.atom(u).label), base);
        acc += u_space.atom(u).weight * part;
    }
    return acc;
}

std::vector<AdmissibleFan> find_admissible_fans(const Diagram& d) {
    std::vector<AdmissibleFan> out;
    for (int u : d.shape()->terminal_objects()) {
        for (int x = 0; x < d.shape()->size(); ++x) {
            if (x == u) continue;
            int z = d.shape()->minimal_common_ancestor(x, u);
            const auto& to_x = d.map(z, x);
            const auto& to_u = d.map(z, u);
            std::set<std::pair<int, int>> images;
            bool minimal = true;
            for (int a = 0; a < d.space_at(z).size() && minimal; ++a)
                minimal = images.emplace(to_x[static_cast<size_t>(a)], to_u[static_cast<size_t>(a)]).second;
            if (!minimal) continue;
            out.push_back({Fan{z, x, u}, d.arrow_is_isomorphism(z, x)});
        }
    }
    return out;
}

Diagram collapse_arrow(const Diagram& d, int i, int j) {
    if (i == j || !d.shape()->is_ancestor(i, j))
        throw ShapeMismatch("collapse requires an arrow between distinct objects");
    if (!d.arrow_is_isomorphism(i, j))
        throw NotAnIsomorphism("arrow (" + d.shape()->object(i) + " -> " + d.shape()->object(j) +
                               ") is not an isomorphism");
    const auto& iso = d.map(i, j);
    std::vector<int> inv(iso.size());
    for (size_t a = 0; a < iso.size(); ++a) inv[static_cast<size_t>(iso[a])] = static_cast<int>(a);

    const IndexingCategory& cat = *d.shape();
    std::vector<std::string> objects;
    for (int k = 0; k < cat.size(); ++k)
        if (k != j) objects.push_back(cat.object(k));

    std::vector<std::pair<std::string, std::string>> arrows;
    for (int a = 0; a < cat.size(); ++a) {
        if (a == j) continue;
        for (int b = 0; b < cat.size(); ++b) {
            if (b == j || b == a) continue;
            if (cat.is_ancestor(a, b)) arrows.emplace_back(cat.object(a), cat.object(b));
        }
        if (a != i && cat.is_ancestor(a, j)) arrows.emplace_back(cat.object(a), cat.object(i));
    }
    IndexingCategory merged = IndexingCategory::validate(objects, arrows);
    Shape new_shape = make_shape(std::move(merged));

    auto old_index = [&](const std::string& name) { return cat.index_of(name); };
    std::vector<Space> spaces;
    for (int a = 0; a < new_shape->size(); ++a) spaces.push_back(d.space_at(old_index(new_shape->object(a))));

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [a, b] : new_shape->covering_arrows()) {
        int oa = old_index(new_shape->object(a));
        int ob = old_index(new_shape->object(b));
        if (cat.is_ancestor(oa, ob)) {
            maps[{a, b}] = d.map(oa, ob);
        } else if (ob == i && cat.is_ancestor(oa, j)) {
            maps[{a, b}] = compose(d.map(oa, j), inv);
        } else if (oa == i && cat.is_ancestor(j, ob)) {
            maps[{a, b}] = compose(iso, d.map(j, ob));
        } else {
            throw ShapeMismatch("collapse produced an underivable arrow");
        }
    }
    return Diagram(new_shape, std::move(spaces), maps);
}

// --- homogeneity ---------------------------------------------------------

namespace {

struct AutomorphismSearch {
    int m = 0;                                   // initial atoms
    std::vector<std::vector<int>> fib;           // fib[obj][x]
    std::vector<int> block_count;                // per object
    long budget = 0;

    // Existence of an initial-atom permutation preserving every fiber
    // partition and sending block `a` of object `obj` to block `b`.
    bool exists(int obj, int a, int b) {
        std::vector<int> sigma(static_cast<size_t>(m), -1);
        std::vector<char> used(static_cast<size_t>(m), 0);
        std::vector<std::vector<int>> block_image(fib.size());
        std::vector<std::vector<char>> block_used(fib.size());
        for (size_t o = 0; o < fib.size(); ++o) {
            block_image[o].assign(static_cast<size_t>(block_count[o]), -1);
            block_used[o].assign(static_cast<size_t>(block_count[o]), 0);
        }
        block_image[static_cast<size_t>(obj)][static_cast<size_t>(a)] = b;
        block_used[static_cast<size_t>(obj)][static_cast<size_t>(b)] = 1;
        budget = 2'000'000;
        return dfs(0, sigma, used, block_image, block_used);
    }

    bool dfs(int x, std::vector<int>& sigma, std::vector<char>& used,
             std::vector<std::vector<int>>& block_image, std::vector<std::vector<char>>& block_used) {
        if (x == m) return true;
        for (int y = 0; y < m; ++y) {
            if (used[static_cast<size_t>(y)]) continue;
            if (--budget < 0) throw SizeLimit("homogeneity search exceeded its budget");
            std::vector<std::pair<size_t, int>> placed;
            bool ok = true;
            for (size_t o = 0; o < fib.size() && ok; ++o) {
                int bx = fib[o][static_cast<size_t>(x)];
                int by = fib[o][static_cast<size_t>(y)];
                int cur = block_image[o][static_cast<size_t>(bx)];
                if (cur == -1) {
                    if (block_used[o][static_cast<size_t>(by)]) {
                        ok = false;
                    } else {
                        block_image[o][static_cast<size_t>(bx)] = by;
                        block_used[o][static_cast<size_t>(by)] = 1;
                        placed.emplace_back(o, bx);
                    }
                } else if (cur != by) {
                    ok = false;
                }
            }
            if (ok) {
                used[static_cast<size_t>(y)] = 1;
                sigma[static_cast<size_t>(x)] = y;
                if (dfs(x + 1, sigma, used, block_image, block_used)) return true;
                used[static_cast<size_t>(y)] = 0;
                sigma[static_cast<size_t>(x)] = -1;
            }
            for (auto [o, bx] : placed) {
                block_used[o][static_cast<size_t>(block_image[o][static_cast<size_t>(bx)])] = 0;
                block_image[o][static_cast<size_t>(bx)] = -1;
            }
        }
        return false;
    }
};

} // namespace

bool is_homogeneous(const Diagram& d) {
    long total = 0;
    for (int i = 0; i < d.shape()->size(); ++i) total += d.space_at(i).size();
    if (total > 64) throw SizeLimit("homogeneity check capped at 64 total atoms");

    // A transitive weight-preserving action forces uniform weights.
    for (int i = 0; i < d.shape()->size(); ++i) {
        const Space& s = d.space_at(i);
        for (int a = 1; a < s.size(); ++a)
            if (s.atom(a).weight != s.atom(0).weight) return false;
    }

    AutomorphismSearch search;
    const int init = d.initial();
    search.m = d.space_at(init).size();
    for (int o = 0; o < d.shape()->size(); ++o) {
        search.fib.push_back(d.map(init, o));
        search.block_count.push_back(d.space_at(o).size());
    }

    for (int o = 0; o < d.shape()->size(); ++o) {
        // Fibers over a transitive object must have equal sizes.
        std::vector<int> size(static_cast<size_t>(d.space_at(o).size()), 0);
        for (int x = 0; x < search.m; ++x) size[static_cast<size_t>(search.fib[static_cast<size_t>(o)][static_cast<size_t>(x)])]++;
        for (int b = 1; b < d.space_at(o).size(); ++b)
            if (size[static_cast<size_t>(b)] != size[0]) return false;
        for (int b = 1; b < d.space_at(o).size(); ++b)
            if (!search.exists(o, 0, b)) return false;
    }
    return true;
}

// --- full diagrams -------------------------------------------------------

namespace {

std::string join_labels(const std::vector<std::string>& labels, unsigned mask) {
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!out.empty()) out += ",";
        out += labels[i];
    }
    return out;
}

unsigned mask_of_object(const std::string& name) {
    unsigned mask = 0;
    for (char c : name) mask |= 1u << (c - '1');
    return mask;
}

} // namespace

FullDiagram full_diagram(const JointTable& joint) {
    if (joint.n < 1 || joint.n > 6) throw SizeLimit("full diagrams support 1 <= n <= 6 variables");
    if (joint.rows.size() > (1u << 20)) throw SizeLimit("joint support too large");

    JointTable table;
    table.n = joint.n;
    Rational total = 0;
    for (const auto& row : joint.rows) {
        if (static_cast<int>(row.labels.size()) != joint.n)
            throw NotADistribution("tuple arity does not match n");
        if (row.weight < 0) throw NotADistribution("negative weight in joint");
        total += row.weight;
        if (row.weight == 0) continue;
        table.rows.push_back(row);
    }
    if (total != 1)
        throw NotADistribution("joint weights sum to " + rational_to_string(total));
    std::sort(table.rows.begin(), table.rows.end(),
              [](const JointRow& a, const JointRow& b) { return a.labels < b.labels; });
    for (size_t r = 1; r < table.rows.size(); ++r)
        if (table.rows[r].labels == table.rows[r - 1].labels)
            throw NotADistribution("duplicate tuple in joint support");

    Shape shape = lambda_shape(table.n);
    const int nobj = shape->size();
    std::vector<Space> spaces;
    std::vector<std::vector<int>> row_atom(static_cast<size_t>(nobj),
                                           std::vector<int>(table.rows.size(), -1));
    for (int o = 0; o < nobj; ++o) {
        unsigned mask = mask_of_object(shape->object(o));
        std::map<std::string, int> seen;
        std::vector<Atom> atoms;
        for (size_t r = 0; r < table.rows.size(); ++r) {
            std::string label = join_labels(table.rows[r].labels, mask);
            auto it = seen.find(label);
            if (it == seen.end()) {
                it = seen.emplace(label, static_cast<int>(atoms.size())).first;
                atoms.push_back({label, Rational(0)});
            }
            atoms[static_cast<size_t>(it->second)].weight += table.rows[r].weight;
            row_atom[static_cast<size_t>(o)][r] = it->second;
        }
        spaces.emplace_back(std::move(atoms));
    }

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : shape->covering_arrows()) {
        std::vector<int> m(static_cast<size_t>(spaces[static_cast<size_t>(i)].size()), -1);
        for (size_t r = 0; r < table.rows.size(); ++r)
            m[static_cast<size_t>(row_atom[static_cast<size_t>(i)][r])] = row_atom[static_cast<size_t>(j)][r];
        maps[{i, j}] = std::move(m);
    }

    Diagram d(shape, std::move(spaces), maps);
    return FullDiagram{std::move(table), std::move(d), std::move(row_atom)};
}

FullDiagram expand_terminal(const FullDiagram& fd, int var, const Space& noise) {
    if (var < 1 || var > fd.joint.n) throw ShapeMismatch("variable index out of range");
    if (noise.size() == 1) return fd;
    JointTable expanded;
    expanded.n = fd.joint.n;
    for (const auto& row : fd.joint.rows) {
        for (int w = 0; w < noise.size(); ++w) {
            JointRow r = row;
            r.labels[static_cast<size_t>(var - 1)] += kTensorJoin + noise.atom(w).label;
            r.weight *= noise.atom(w).weight;
            expanded.rows.push_back(std::move(r));
        }
    }
    return full_diagram(expanded);
}

// --- two-fans ------------------------------------------------------------

TwoFanOfDiagrams::TwoFanOfDiagrams(Diagram apex, Diagram left, Diagram right,
                                   std::vector<std::vector<int>> to_left,
                                   std::vector<std::vector<int>> to_right)
    : apex_(std::move(apex)), left_(std::move(left)), right_(std::move(right)),
      to_left_(std::move(to_left)), to_right_(std::move(to_right)) {
    if (!same_shape(apex_.shape(), left_.shape()) || !same_shape(apex_.shape(), right_.shape()))
        throw ShapeMismatch("fan legs over different shapes");
    const int n = apex_.shape()->size();
    if (static_cast<int>(to_left_.size()) != n || static_cast<int>(to_right_.size()) != n)
        throw ShapeMismatch("fan leg count does not match shape");
    for (int o = 0; o < n; ++o) {
        validate_reduction_indices(apex_.space_at(o), left_.space_at(o), to_left_[static_cast<size_t>(o)]);
        validate_reduction_indices(apex_.space_at(o), right_.space_at(o), to_right_[static_cast<size_t>(o)]);
    }
    // Naturality on covering arrows; longer paths follow by composition.
    for (const auto& [i, j] : apex_.shape()->covering_arrows()) {
        if (compose(apex_.map(i, j), to_left_[static_cast<size_t>(j)]) !=
            compose(to_left_[static_cast<size_t>(i)], left_.map(i, j)))
            throw NotMeasurePreserving("left leg is not natural at arrow " +
                                       apex_.shape()->object(i) + " -> " + apex_.shape()->object(j));
        if (compose(apex_.map(i, j), to_right_[static_cast<size_t>(j)]) !=
            compose(to_right_[static_cast<size_t>(i)], right_.map(i, j)))
            throw NotMeasurePreserving("right leg is not natural at arrow " +
                                       apex_.shape()->object(i) + " -> " + apex_.shape()->object(j));
    }
}

int entropy_pairing_sign(const Diagram& d, const InfoVector& v) {
    if (!same_shape(d.shape(), v.shape)) throw ShapeMismatch("pairing over different shapes");
    // sum_I c_I H(X_I) = sum_{I,x} (-c_I w_x) ln(w_x), all rational inputs.
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& [o, c] : v.coeff) {
        const Space& s = d.space_at(o);
        for (int a = 0; a < s.size(); ++a)
            terms.emplace_back(-c * s.atom(a).weight, s.atom(a).weight);
    }
    return sign_of_log_combination(terms);
}

Diagram space_as_diagram(const Space& x) {
    return Diagram(lambda_shape(1), {x}, {});
}

TwoFanOfDiagrams two_fan_of_spaces(const Space& apex, const Space& left, const Space& right,
                                   const std::vector<int>& to_left, const std::vector<int>& to_right) {
    return TwoFanOfDiagrams(space_as_diagram(apex), space_as_diagram(left), space_as_diagram(right),
                            {to_left}, {to_right});
}

TwoFanOfDiagrams minimize_fan(const TwoFanOfDiagrams& fan) {
    const Shape& shape = fan.apex().shape();
    const int n = shape->size();

    std::vector<Space> spaces;
    std::vector<std::vector<int>> apex_to_new(static_cast<size_t>(n)); // old apex atom -> merged atom
    std::vector<std::vector<int>> new_left(static_cast<size_t>(n)), new_right(static_cast<size_t>(n));
    for (int o = 0; o < n; ++o) {
        const Space& z = fan.apex().space_at(o);
        std::map<std::pair<int, int>, int> merged;
        std::vector<Atom> atoms;
        apex_to_new[static_cast<size_t>(o)].assign(static_cast<size_t>(z.size()), -1);
        for (int a = 0; a < z.size(); ++a) {
            std::pair<int, int> key{fan.leg_left(o)[static_cast<size_t>(a)], fan.leg_right(o)[static_cast<size_t>(a)]};
            auto it = merged.find(key);
            if (it == merged.end()) {
                it = merged.emplace(key, static_cast<int>(atoms.size())).first;
                atoms.push_back({"(" + fan.left().space_at(o).atom(key.first).label + "," +
                                     fan.right().space_at(o).atom(key.second).label + ")",
                                 Rational(0)});
                new_left[static_cast<size_t>(o)].push_back(key.first);
                new_right[static_cast<size_t>(o)].push_back(key.second);
            }
            atoms[static_cast<size_t>(it->second)].weight += z.atom(a).weight;
            apex_to_new[static_cast<size_t>(o)][static_cast<size_t>(a)] = it->second;
        }
        spaces.emplace_back(std::move(atoms));
    }

    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& [i, j] : shape->covering_arrows()) {
        std::vector<int> m(static_cast<size_t>(spaces[static_cast<size_t>(i)].size()), -1);
        const auto& old_map = fan.apex().map(i, j);
        for (int a = 0; a < fan.apex().space_at(i).size(); ++a)
            m[static_cast<size_t>(apex_to_new[static_cast<size_t>(i)][static_cast<size_t>(a)])] =
                apex_to_new[static_cast<size_t>(j)][static_cast<size_t>(old_map[static_cast<size_t>(a)])];
        maps[{i, j}] = std::move(m);
    }
    Diagram new_apex(shape, std::move(spaces), maps);
    return TwoFanOfDiagrams(std::move(new_apex), fan.left(), fan.right(),
                            std::move(new_left), std::move(new_right));
}

} // namespace entrocone
