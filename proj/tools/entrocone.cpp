#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "entrocone/coupling.hpp"
#include "entrocone/explorer.hpp"
#include "entrocone/json_io.hpp"

namespace ec = entrocone;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ec::LogBase parse_base(const std::string& text) {
    if (text == "e") return ec::LogBase::natural();
    return ec::LogBase::of(ec::parse_rational(text));
}

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string timestamp_utc() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Every output file gets a sidecar manifest describing the run.
void write_manifest(const std::string& out_path, const std::string& command,
                    const std::vector<std::string>& args,
                    const std::vector<std::string>& inputs,
                    std::optional<unsigned long long> seed) {
    ec::Json m;
    m["command"] = command;
    m["arguments"] = args;
    m["seed"] = seed ? ec::Json(*seed) : ec::Json(nullptr);
    m["tool_version"] = kVersion;
    ec::Json hashes = ec::Json::object();
    for (const auto& path : inputs) hashes[path] = ec::file_hash(path);
    m["input_hashes"] = std::move(hashes);
    m["timestamp"] = timestamp_utc();
    std::ofstream out(out_path + ".manifest.json");
    out << m.dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ec::ParseError("cannot write '" + path + "'");
    out << content;
}

// Dyadic two-atom noise with entropy within 1e-6 of the requested bits.
ec::Space noise_for_lambda(double bits) {
    if (bits < 0) throw ec::ParseError("lambda must be nonnegative");
    int whole = static_cast<int>(std::floor(bits));
    double frac = bits - whole;
    ec::Space acc = ec::power(ec::Space::fair_coin(), whole);
    if (frac > 1e-9) {
        auto h2 = [](double p) {
            if (p <= 0 || p >= 1) return 0.0;
            return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
        };
        const long den = 1L << 20;
        long lo = 0, hi = den / 2; // h2 monotone on [0, 1/2]
        while (lo + 1 < hi) {
            long mid = (lo + hi) / 2;
            if (h2(static_cast<double>(mid) / den) < frac)
                lo = mid;
            else
                hi = mid;
        }
        long best = std::abs(h2(static_cast<double>(lo) / den) - frac) <
                            std::abs(h2(static_cast<double>(hi) / den) - frac)
                        ? lo
                        : hi;
        if (std::abs(h2(static_cast<double>(best) / den) - frac) > 1e-6)
            throw ec::ParseError("cannot approximate lambda to 1e-6 with dyadic weights");
        acc = ec::tensor(acc, ec::Space::two_atom(ec::ratio(best, den)));
    }
    return acc;
}

int run_verify_table1(bool strict, const std::string& only_row) {
    ec::SimplexChart chart = strict ? ec::chart_with_printed_rows() : ec::ning_chart();
    ec::ChartReport report = ec::verify_chart(chart);
    bool ok = true;
    for (const auto& c : report.checks) {
        if (!only_row.empty() && c.row != only_row) continue;
        ok = ok && c.pass;
        std::printf("%-4s %-15s %s%s%s\n", c.row.c_str(), c.check.c_str(),
                    c.pass ? "pass" : "FAIL", c.note.empty() ? "" : "  ", c.note.c_str());
    }
    if (only_row.empty())
        for (const auto& n : report.reconciliation_notes) std::printf("note %s\n", n.c_str());
    std::printf("table verification: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int run_rays(const std::string& cone, const std::string& out_path,
             const std::vector<std::string>& args) {
    ec::Shape shape = ec::lambda_shape(4);
    ec::ConeSpec spec =
        (cone == "smc") ? ec::shannon_generators(shape) : ec::abelian_cone_spec(shape);
    auto rays = ec::extremal_rays(spec);
    auto orbits = ec::sn_orbits(shape, rays);

    ec::Json j;
    j["cone"] = cone;
    j["dimension"] = shape->size();
    j["coordinate_order"] = shape->objects();
    j["ray_count"] = rays.size();
    j["orbit_count"] = orbits.size();
    ec::Json jorbits = ec::Json::array();
    for (const auto& orbit : orbits) {
        ec::Json jo;
        jo["size"] = orbit.size();
        jo["representative"] = ec::vector15_to_json(orbit.front());
        ec::Json members = ec::Json::array();
        for (const auto& r : orbit) members.push_back(ec::vector15_to_json(r));
        jo["members"] = std::move(members);
        jorbits.push_back(std::move(jo));
    }
    j["orbits"] = std::move(jorbits);

    std::printf("%s: %zu extremal rays in %zu orbits\n", cone.c_str(), rays.size(), orbits.size());
    for (const auto& orbit : orbits) {
        std::string rep;
        for (const auto& c : orbit.front()) rep += ec::rational_to_string(c) + " ";
        std::printf("  orbit size %zu: %s\n", orbit.size(), rep.c_str());
    }
    if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        write_manifest(out_path, "rays", args, {}, std::nullopt);
    }
    size_t want_rays = (cone == "smc") ? 41 : 35;
    size_t want_orbits = (cone == "smc") ? 11 : 10;
    if (rays.size() != want_rays || orbits.size() != want_orbits) {
        std::fprintf(stderr, "ray/orbit counts diverge from the expected %zu/%zu\n", want_rays,
                     want_orbits);
        return 2;
    }
    return 0;
}

int run_check(const std::string& vector_path, const std::string& cone) {
    auto coords = ec::vector15_from_json(ec::load_json_file(vector_path));
    ec::Shape shape = ec::lambda_shape(4);
    ec::EntropyVector f = ec::EntropyVector::exact(shape, coords);
    ec::ConeSpec spec =
        (cone == "smc") ? ec::shannon_generators(shape) : ec::abelian_cone_spec(shape);
    ec::Membership m = ec::in_cone(f, spec, 0.0);
    if (m.member) {
        std::printf("member of %s\n", cone.c_str());
        return 0;
    }
    std::printf("not a member of %s: most violated generator %s = %s\n", cone.c_str(),
                m.witness.c_str(), ec::rational_to_string(m.worst_exact_value).c_str());
    return 1;
}

int run_ikd(const std::string& left_path, const std::string& right_path, bool greedy, int power,
            const std::string& base_text, const std::string& out_path,
            const std::vector<std::string>& args) {
    ec::LogBase base = parse_base(base_text);
    ec::Diagram left = ec::diagram_from_any_json(ec::load_json_file(left_path));
    ec::Diagram right = ec::diagram_from_any_json(ec::load_json_file(right_path));
    if (power > 1) {
        left = ec::diagram_power(left, power);
        right = ec::diagram_power(right, power);
    }
    ec::IkdResult r = greedy ? ec::ikd_greedy(left, right, base) : ec::ikd_exact(left, right, base);

    ec::Json j;
    j["method"] = greedy ? "greedy" : "exact";
    j["power"] = power;
    j["value"] = r.value;
    if (r.scalar_value.is_exact()) j["value_exact"] = ec::rational_to_string(r.scalar_value.exact());
    ec::Json coupling = ec::Json::array();
    const ec::Space& l0 = left.space_at(left.initial());
    const ec::Space& r0 = right.space_at(right.initial());
    for (const auto& [a, b, w] : r.joint)
        coupling.push_back({{"left", l0.atom(a).label},
                            {"right", r0.atom(b).label},
                            {"weight", ec::rational_to_string(w)}});
    j["coupling"] = std::move(coupling);
    ec::Json cert;
    if (greedy) {
        cert["method"] = "greedy largest-remaining-mass pairing; value is an upper bound";
    } else {
        cert["method"] = "transport-polytope vertex enumeration";
        cert["vertices_enumerated"] = r.vertices_enumerated;
    }
    j["certificate"] = std::move(cert);

    std::printf("ikd %s= %s\n", greedy ? "(greedy upper bound) " : "",
                format_double(r.value).c_str());
    if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        write_manifest(out_path, "ikd", args, {left_path, right_path}, std::nullopt);
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int run_expand(const std::string& in_path, int index, double lambda_bits,
               const std::string& noise_path, const std::string& out_path,
               const std::vector<std::string>& args) {
    ec::FullDiagram fd = ec::full_diagram(ec::joint_from_json(ec::load_json_file(in_path)));
    ec::Space noise = noise_path.empty() ? noise_for_lambda(lambda_bits)
                                         : ec::space_from_json(ec::load_json_file(noise_path));
    ec::FullDiagram expanded = ec::expand_terminal(fd, index, noise);

    const ec::LogBase bits = ec::LogBase::bits();
    ec::EntropyVector before = ec::entropy_vector(fd.diagram, bits);
    ec::EntropyVector after = ec::entropy_vector(expanded.diagram, bits);
    std::printf("noise entropy: %s bits\n", format_double(ec::entropy(noise, bits).value()).c_str());
    for (int o = 0; o < fd.shape()->size(); ++o) {
        double b = before.values[static_cast<size_t>(o)].value();
        double a = after.values[static_cast<size_t>(o)].value();
        std::printf("  [%s] %s -> %s (delta %s)\n", fd.shape()->object(o).c_str(),
                    format_double(b).c_str(), format_double(a).c_str(), format_double(a - b).c_str());
    }
    if (fd.joint.n == 4) {
        auto ab = ec::alpha_coords(before);
        auto aa = ec::alpha_coords(after);
        std::printf("alpha before:");
        for (const auto& a : ab) std::printf(" %s", format_double(a.value()).c_str());
        std::printf("\nalpha after: ");
        for (const auto& a : aa) std::printf(" %s", format_double(a.value()).c_str());
        std::printf("\n");
    }
    if (!out_path.empty()) {
        write_file(out_path, ec::joint_to_json(expanded.joint).dump(2) + "\n");
        std::vector<std::string> inputs = {in_path};
        if (!noise_path.empty()) inputs.push_back(noise_path);
        write_manifest(out_path, "expand", args, inputs, std::nullopt);
    }
    return 0;
}

int run_explore(unsigned long long seed, int samples, bool groups, bool distributions,
                const std::string& support_text, int order_cap, double bucket_width,
                bool diagnostic_grid, long maximize_budget, const std::string& out_path,
                int threads, const std::vector<std::string>& args) {
    if (!groups && !distributions && maximize_budget <= 0) {
        groups = true;
        distributions = true;
    }
    std::vector<int> support;
    {
        std::stringstream ss(support_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) support.push_back(std::stoi(tok));
    }

    std::vector<ec::SamplePoint> dataset;
    if (distributions) {
        auto pts = ec::sample_distributions(seed, samples, support, threads);
        dataset.insert(dataset.end(), pts.begin(), pts.end());
    }
    if (groups) {
        auto pts = ec::sample_group_points(seed, samples, order_cap, threads);
        dataset.insert(dataset.end(), pts.begin(), pts.end());
    }
    if (maximize_budget > 0) {
        ec::SearchResult sr = ec::maximize_alpha15(seed, maximize_budget);
        std::printf("maximize_alpha15: best %s, exact ing sign %d, violation %s\n",
                    format_double(sr.best_alpha15).c_str(), sr.exact_ing_sign,
                    sr.violation_found ? "FOUND" : "not found");
        dataset.push_back(sr.best);
    }

    ec::GridSpec grid;
    grid.width = bucket_width;
    grid.include_first_four = diagnostic_grid;
    ec::PhiTable table = ec::phi_inner_bound(dataset, grid);

    // Witness descriptors go into a sidecar JSON; the CSV references ids.
    std::map<std::string, std::string> witness_ids;
    std::ostringstream csv;
    csv << "bucket,max_alpha15,witness\n";
    for (const auto& [key, entry] : table.buckets) {
        std::string bucket;
        for (size_t i = 0; i < key.size(); ++i) bucket += (i ? ":" : "") + std::to_string(key[i]);
        auto it = witness_ids.find(entry.second);
        if (it == witness_ids.end())
            it = witness_ids.emplace(entry.second, "w" + std::to_string(witness_ids.size())).first;
        csv << bucket << "," << format_double(entry.first) << "," << it->second << "\n";
    }
    std::printf("explore: %zu points, %zu buckets, %ld skipped (nonpositive alpha sum)\n",
                dataset.size(), table.buckets.size(), table.skipped);
    if (!out_path.empty()) {
        write_file(out_path, csv.str());
        ec::Json witnesses = ec::Json::object();
        for (const auto& [desc, id] : witness_ids) witnesses[id] = ec::Json::parse(desc);
        write_file(out_path + ".witnesses.json", witnesses.dump(2) + "\n");
        write_manifest(out_path, "explore", args, {}, seed);
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int run_validate(const std::string& kind, const std::string& path) {
    ec::Json j = ec::load_json_file(path);
    if (kind == "indexing") {
        ec::IndexingCategory cat = ec::indexing_from_json(j);
        std::printf("valid indexing category: %d objects, initial '%s', %zu terminal objects\n",
                    cat.size(), cat.object(cat.initial_object()).c_str(),
                    cat.terminal_objects().size());
    } else if (kind == "space") {
        ec::Space s = ec::space_from_json(j);
        std::printf("valid probability space: %d atoms, entropy %s bits\n", s.size(),
                    format_double(ec::entropy(s, ec::LogBase::bits()).value()).c_str());
    } else if (kind == "full") {
        ec::FullDiagram fd = ec::full_diagram(ec::joint_from_json(j));
        std::printf("valid full diagram: n=%d, %zu support rows, initial space %d atoms\n",
                    fd.joint.n, fd.joint.rows.size(),
                    fd.diagram.space_at(fd.diagram.initial()).size());
    } else if (kind == "group") {
        ec::GroupDiagram gd = ec::group_diagram_of(ec::group_rep_from_json(j));
        std::printf("valid group diagram: ambient order %d\n", gd.group.order());
    } else {
        ec::Diagram d = ec::diagram_from_json(j);
        std::printf("valid diagram: %d objects over shape with initial '%s'\n", d.shape()->size(),
                    d.shape()->object(d.initial()).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "entrocone: diagrams of finite probability spaces and the four-variable entropy cones"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::vector<std::string> raw_args;
    for (int i = 1; i < argc; ++i) raw_args.emplace_back(argv[i]);

    auto* verify = app.add_subcommand("verify-table1", "verify the simplex chart data");
    bool strict = false;
    std::string only_row;
    verify->add_flag("--strict-paper", strict,
                     "verify the original rows instead of the reconciled ones");
    verify->add_option("--row", only_row, "restrict to one row (a1..a15)");

    auto* rays = app.add_subcommand("rays", "enumerate extremal rays of a cone");
    std::string cone = "smc", rays_out;
    rays->add_option("--cone", cone, "smc or abc")->check(CLI::IsMember({"smc", "abc"}));
    rays->add_option("--out", rays_out, "write JSON ray list");

    auto* check = app.add_subcommand("check", "test cone membership of a 15-coordinate vector");
    std::string vector_path, check_cone = "smc";
    check->add_option("--vector", vector_path, "JSON file with 15 'p/q' coordinates")->required();
    check->add_option("--cone", check_cone, "smc or abc")->check(CLI::IsMember({"smc", "abc"}));

    auto* ikd = app.add_subcommand("ikd", "intrinsic entropy distance between two diagrams");
    std::string left_path, right_path, ikd_out, base_text = "2";
    bool greedy = false, exact = false;
    int power = 1;
    ikd->add_option("--left", left_path)->required();
    ikd->add_option("--right", right_path)->required();
    ikd->add_flag("--greedy", greedy, "greedy upper bound instead of the exact minimum");
    ikd->add_flag("--exact", exact, "exact transport-polytope minimum (default)");
    ikd->add_option("--power", power, "tensor power applied to both inputs");
    ikd->add_option("--base", base_text, "log base: 2, 3, e, or a rational > 1");
    ikd->add_option("--out", ikd_out, "write result JSON");

    auto* expand = app.add_subcommand("expand", "expand a terminal variable by independent noise");
    std::string expand_in, noise_path, expand_out;
    int index = 1;
    double lambda_bits = 0.0;
    expand->add_option("--in", expand_in, "full-diagram JSON")->required();
    expand->add_option("--index", index, "terminal variable (1-based)")->required();
    expand->add_option("--lambda", lambda_bits, "noise entropy in bits (dyadic approximation)");
    expand->add_option("--noise", noise_path, "explicit noise space JSON");
    expand->add_option("--out", expand_out, "write expanded full-diagram JSON");

    auto* explore =
        app.add_subcommand("explore", "sample entropy vectors and build the alpha15 table");
    unsigned long long seed = 1;
    int samples = 100, order_cap = 64, threads = default_threads();
    bool groups = false, distributions = false, diagnostic_grid = false;
    std::string support_text = "3,3,3,3", explore_out;
    double bucket_width = 0.05;
    long maximize_budget = 0;
    explore->add_option("--seed", seed)->required();
    explore->add_option("--samples", samples);
    explore->add_flag("--groups", groups, "sample Abelian group diagrams");
    explore->add_flag("--distributions", distributions, "sample random dyadic joints");
    explore->add_option("--support", support_text, "per-variable support sizes, comma separated");
    explore->add_option("--order-cap", order_cap, "largest sampled group order");
    explore->add_option("--bucket", bucket_width, "bucket width for the alpha grid");
    explore->add_flag("--diagnostic-grid", diagnostic_grid, "bucket on alpha_1..alpha_14");
    explore->add_option("--maximize", maximize_budget, "run the alpha15 search with this budget");
    explore->add_option("--out", explore_out, "write the CSV table");
    explore->add_option("--threads", threads, "worker threads")->envname("ENTROCONE_THREADS");

    auto* validate = app.add_subcommand("validate", "validate input files");
    std::string v_indexing, v_space, v_full, v_diagram, v_group;
    validate->add_option("--indexing", v_indexing);
    validate->add_option("--space", v_space);
    validate->add_option("--full", v_full);
    validate->add_option("--diagram", v_diagram);
    validate->add_option("--group", v_group);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify_table1(strict, only_row);
        if (rays->parsed()) return run_rays(cone, rays_out, raw_args);
        if (check->parsed()) return run_check(vector_path, check_cone);
        if (ikd->parsed())
            return run_ikd(left_path, right_path, greedy && !exact, power, base_text, ikd_out,
                           raw_args);
        if (expand->parsed())
            return run_expand(expand_in, index, lambda_bits, noise_path, expand_out, raw_args);
        if (explore->parsed())
            return run_explore(seed, samples, groups, distributions, support_text, order_cap,
                               bucket_width, diagnostic_grid, maximize_budget, explore_out,
                               threads, raw_args);
        if (validate->parsed()) {
            if (!v_indexing.empty()) return run_validate("indexing", v_indexing);
            if (!v_space.empty()) return run_validate("space", v_space);
            if (!v_full.empty()) return run_validate("full", v_full);
            if (!v_group.empty()) return run_validate("group", v_group);
            if (!v_diagram.empty()) return run_validate("diagram", v_diagram);
            std::fprintf(stderr, "validate: no input given\n");
            return 3;
        }
    } catch (const ec::ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 3;
    } catch (const ec::UnknownLabel& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 3;
    } catch (const ec::Error& e) {
        if (e.code() == "Internal" || e.code() == "NumericalRankFailure") {
            std::fprintf(stderr, "internal invariant breach: %s\n", e.what());
            return 2;
        }
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 0;
}
