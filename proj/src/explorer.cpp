#include "entrocone/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace entrocone {

namespace {

template <typename F>
auto parallel_indexed(int count, int threads, F f) {
    using T = decltype(f(0));
    std::vector<T> out(static_cast<size_t>(count));
    threads = std::max(1, std::min(threads, count == 0 ? 1 : count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                out[static_cast<size_t>(i)] = f(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

const ConeSpec& lambda4_shannon() {
    static const ConeSpec spec = shannon_generators(lambda_shape(4));
    return spec;
}

const std::vector<InfoVector>& lambda4_ingleton() {
    static const std::vector<InfoVector> vecs = ingleton_vectors(lambda_shape(4));
    return vecs;
}

constexpr long kMassUnits = 1024; // dyadic denominator 2^10

// Random integer masses summing to total: sorted cutpoints, then gaps.
std::vector<long> random_masses(SplitMix64& rng, int cells, long total) {
    std::vector<long> cuts;
    cuts.reserve(static_cast<size_t>(cells) + 1);
    cuts.push_back(0);
    for (int i = 0; i < cells - 1; ++i)
        cuts.push_back(static_cast<long>(rng.below(static_cast<unsigned long long>(total) + 1)));
    cuts.push_back(total);
    std::sort(cuts.begin(), cuts.end());
    std::vector<long> masses(static_cast<size_t>(cells));
    for (int i = 0; i < cells; ++i) masses[static_cast<size_t>(i)] = cuts[static_cast<size_t>(i) + 1] - cuts[static_cast<size_t>(i)];
    return masses;
}

JointTable joint_from_masses(const std::vector<int>& sizes, const std::vector<long>& masses) {
    JointTable table;
    table.n = static_cast<int>(sizes.size());
    int cells = 1;
    for (int s : sizes) cells *= s;
    for (int c = 0; c < cells; ++c) {
        if (masses[static_cast<size_t>(c)] == 0) continue;
        JointRow row;
        int rem = c;
        for (int v = 0; v < table.n; ++v) {
            row.labels.push_back(std::to_string(rem % sizes[static_cast<size_t>(v)]));
            rem /= sizes[static_cast<size_t>(v)];
        }
        row.weight = ratio(masses[static_cast<size_t>(c)], kMassUnits);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace

SamplePoint make_sample_point(std::string descriptor, EntropyVector vec) {
    SamplePoint p;
    p.descriptor = std::move(descriptor);
    auto alphas = alpha_coords(vec);
    for (size_t i = 0; i < 15; ++i) p.alpha[i] = alphas[i].value();
    Membership m = in_cone(vec, lambda4_shannon(), 1e-9);
    if (!m.member)
        throw Error("Internal", "sampled entropy vector fails Shannon validity: " + m.witness);
    p.in_smc = true;
    bool first = true;
    for (const auto& ing : lambda4_ingleton()) {
        double v = pair(vec, ing).value();
        if (first || v < p.ingleton_min) p.ingleton_min = v;
        first = false;
    }
    p.vec = std::move(vec);
    return p;
}

std::vector<SamplePoint> sample_distributions(unsigned long long seed, int count,
                                              const std::vector<int>& support_sizes,
                                              int threads) {
    std::vector<int> sizes = support_sizes;
    if (sizes.size() == 1) sizes.assign(4, sizes[0]);
    if (sizes.size() != 4) throw ParseError("need one or four support sizes");
    int cells = 1;
    for (int s : sizes) {
        if (s < 1 || s > 6) throw SizeLimit("support sizes must be between 1 and 6");
        cells *= s;
    }

    SplitMix64 root(seed);
    return parallel_indexed(count, threads, [&](int index) {
        SplitMix64 rng = root.fork(static_cast<unsigned long long>(index));
        auto masses = random_masses(rng, cells, kMassUnits);
        JointTable joint = joint_from_masses(sizes, masses);
        FullDiagram fd = full_diagram(joint);
        std::ostringstream desc;
        desc << "{\"kind\":\"distribution\",\"seed\":" << seed << ",\"index\":" << index
             << ",\"support\":[" << sizes[0] << "," << sizes[1] << "," << sizes[2] << ","
             << sizes[3] << "]}";
        return make_sample_point(desc.str(), entropy_vector(fd.diagram, LogBase::bits()));
    });
}

std::vector<SamplePoint> sample_group_points(unsigned long long seed, int count, int order_cap,
                                             int threads) {
    if (order_cap < 2 || order_cap > 4096) throw SizeLimit("group order cap must be in [2, 4096]");
    SplitMix64 root(seed);
    const std::vector<int> factor_pool = {2, 2, 2, 3, 3, 4, 5, 7, 8, 9};

    return parallel_indexed(count, threads, [&](int index) {
        SplitMix64 rng = root.fork(0x9e3779b9ULL + static_cast<unsigned long long>(index));
        std::vector<int> orders;
        int order = 1;
        int factors = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < factors; ++i) {
            int f = factor_pool[rng.below(factor_pool.size())];
            if (order > order_cap / f) break;
            orders.push_back(f);
            order *= f;
        }
        if (orders.empty()) orders.push_back(2);
        AbelianGroup g(orders);

        std::vector<Subgroup> terminals;
        std::ostringstream gens_desc;
        gens_desc << "[";
        for (int t = 0; t < 4; ++t) {
            int gens = static_cast<int>(rng.below(3));
            std::vector<int> generator_elems;
            for (int k = 0; k < gens; ++k)
                generator_elems.push_back(static_cast<int>(rng.below(static_cast<unsigned long long>(g.order()))));
            terminals.push_back(span(g, generator_elems));
            if (t) gens_desc << ",";
            gens_desc << "[";
            for (size_t k = 0; k < generator_elems.size(); ++k)
                gens_desc << (k ? "," : "") << generator_elems[k];
            gens_desc << "]";
        }
        gens_desc << "]";

        GroupDiagram gd = minimal_group_diagram(g, terminals);
        // Base: the prime p when the order is a p-power (integer vector),
        // otherwise bits.
        LogBase base = LogBase::bits();
        for (int p : {2, 3, 5, 7}) {
            long o = g.order();
            while (o % p == 0) o /= p;
            if (o == 1) {
                base = LogBase::of(Rational(p));
                break;
            }
        }
        for (const auto& ing : lambda4_ingleton())
            if (pairing_sign(gd, ing) < 0)
                throw Error("Internal", "Abelian point violates " + ing.name);

        std::ostringstream desc;
        desc << "{\"kind\":\"group\",\"orders\":[";
        for (size_t k = 0; k < orders.size(); ++k) desc << (k ? "," : "") << orders[k];
        desc << "],\"subgroup_generators\":" << gens_desc.str() << "}";
        return make_sample_point(desc.str(), exact_entropy_vector(gd, base));
    });
}

namespace {

// Fast alpha_15 = -ing(12;34) evaluation over a 2x2x2x2 dyadic mass table.
double alpha15_of_masses(const std::vector<long>& units) {
    // Subset entropies in bits.
    double h[16];
    for (unsigned mask = 1; mask < 16; ++mask) {
        double slot[16] = {0};
        for (int c = 0; c < 16; ++c)
            slot[static_cast<unsigned>(c) & mask] += static_cast<double>(units[static_cast<size_t>(c)]);
        double acc = 0.0;
        for (double s : slot) {
            if (s <= 0) continue;
            double p = s / static_cast<double>(kMassUnits);
            acc -= p * std::log2(p);
        }
        h[mask] = acc;
    }
    auto mi = [&](unsigned a, unsigned b) { return h[a] + h[b] - h[a | b]; };
    auto cmi = [&](unsigned a, unsigned b, unsigned c) {
        return h[a | c] + h[b | c] - h[c] - h[a | b | c];
    };
    double ing = -mi(1, 2) + cmi(1, 2, 4) + cmi(1, 2, 8) + mi(4, 8);
    return -ing;
}

} // namespace

SearchResult maximize_alpha15(unsigned long long seed, long budget) {
    const std::vector<int> sizes = {2, 2, 2, 2};
    const int cells = 16;
    const long restart_interval = 4000;

    SplitMix64 rng(seed);
    SearchResult result;

    std::vector<long> best_units;
    double best_value = 0.0;
    bool have_best = false;

    std::vector<long> units;
    double current = 0.0;
    long since_restart = restart_interval; // force an initial draw

    for (long it = 0; it < budget; ++it) {
        if (since_restart >= restart_interval) {
            units = random_masses(rng, cells, kMassUnits);
            current = alpha15_of_masses(units);
            since_restart = 0;
        } else {
            int src = static_cast<int>(rng.below(cells));
            int dst = static_cast<int>(rng.below(cells));
            long amount = 1L << rng.below(6);
            amount = std::min(amount, units[static_cast<size_t>(src)]);
            if (src != dst && amount > 0) {
                units[static_cast<size_t>(src)] -= amount;
                units[static_cast<size_t>(dst)] += amount;
                double candidate = alpha15_of_masses(units);
                if (candidate > current) {
                    current = candidate;
                } else {
                    units[static_cast<size_t>(src)] += amount;
                    units[static_cast<size_t>(dst)] -= amount;
                }
            }
            ++since_restart;
        }
        if (!have_best || current > best_value) {
            best_value = current;
            best_units = units;
            have_best = true;
        }
        ++result.iterations;
    }
    if (!have_best) {
        units = random_masses(rng, cells, kMassUnits);
        best_units = units;
        best_value = alpha15_of_masses(units);
        result.iterations = 1;
    }

    result.witness = joint_from_masses(sizes, best_units);
    FullDiagram fd = full_diagram(result.witness);
    std::ostringstream desc;
    desc << "{\"kind\":\"search\",\"seed\":" << seed << ",\"budget\":" << budget << "}";
    result.best = make_sample_point(desc.str(), entropy_vector(fd.diagram, LogBase::bits()));
    result.best_alpha15 = result.best.alpha[14];
    result.exact_ing_sign =
        entropy_pairing_sign(fd.diagram, ingleton_vector(fd.shape(), 1, 2, 3, 4));
    result.violation_found = result.exact_ing_sign < 0;
    return result;
}

ExpansionReport expansion_sweep(const FullDiagram& point, const std::array<Space, 4>& noises) {
    if (lambda_n_of(*point.shape()) != 4) throw ShapeMismatch("expansion sweep requires lambda-4");
    const LogBase bits = LogBase::bits();

    ExpansionReport report;
    report.before = entropy_vector(point.diagram, bits);
    FullDiagram current = point;
    for (int v = 1; v <= 4; ++v) {
        report.noise_entropy[static_cast<size_t>(v - 1)] = entropy(noises[static_cast<size_t>(v - 1)], bits).value();
        current = expand_terminal(current, v, noises[static_cast<size_t>(v - 1)]);
    }
    report.after = entropy_vector(current.diagram, bits);

    const Shape& s = point.shape();
    report.max_delta_law_error = 0.0;
    for (int o = 0; o < s->size(); ++o) {
        double expected = 0.0;
        for (char c : s->object(o)) expected += report.noise_entropy[static_cast<size_t>(c - '1')];
        double delta = report.after.values[static_cast<size_t>(o)].value() -
                       report.before.values[static_cast<size_t>(o)].value();
        report.max_delta_law_error = std::max(report.max_delta_law_error, std::abs(delta - expected));
    }
    report.delta_law_ok = report.max_delta_law_error <= 1e-9;

    auto ab = alpha_coords(report.before);
    auto aa = alpha_coords(report.after);
    for (size_t i = 0; i < 15; ++i) {
        report.alpha_before[i] = ab[i].value();
        report.alpha_after[i] = aa[i].value();
    }
    report.max_alpha_drift = 0.0;
    for (size_t i = 4; i < 15; ++i)
        report.max_alpha_drift =
            std::max(report.max_alpha_drift, std::abs(report.alpha_after[i] - report.alpha_before[i]));
    return report;
}

void PhiTable::insert(const SamplePoint& p) {
    // Normalize by the alpha mass of the coordinates the boundary function
    // actually depends on; this block is invariant under terminal expansion,
    // so a point and its expansion images share a bucket and a value.
    double sum = 0.0;
    for (size_t j = 4; j < 15; ++j) sum += p.alpha[j];
    if (sum <= 1e-9) {
        ++skipped;
        return;
    }
    std::vector<int> key;
    size_t first = grid.include_first_four ? 0 : 4;
    for (size_t j = first; j < 14; ++j)
        key.push_back(static_cast<int>(std::floor(p.alpha[j] / sum / grid.width)));
    double value = p.alpha[14] / sum;
    auto it = buckets.find(key);
    if (it == buckets.end()) {
        buckets.emplace(std::move(key), std::make_pair(value, p.descriptor));
    } else if (value > it->second.first ||
               (value == it->second.first && p.descriptor < it->second.second)) {
        it->second = {value, p.descriptor};
    }
}

void PhiTable::merge(const PhiTable& other) {
    skipped += other.skipped;
    for (const auto& [key, entry] : other.buckets) {
        auto it = buckets.find(key);
        if (it == buckets.end()) {
            buckets.emplace(key, entry);
        } else if (entry.first > it->second.first ||
                   (entry.first == it->second.first && entry.second < it->second.second)) {
            it->second = entry;
        }
    }
}

PhiTable phi_inner_bound(const std::vector<SamplePoint>& dataset, const GridSpec& grid) {
    PhiTable table;
    table.grid = grid;
    for (const auto& p : dataset) table.insert(p);
    return table;
}

} // namespace entrocone
