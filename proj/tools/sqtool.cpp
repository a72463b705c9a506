// sqtool: enumeration, squish, generating functions, checks and renderings

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "render.hpp"
#include "sq/acceptance.hpp"
#include "sq/parallel.hpp"
#include "sq/partitionfn.hpp"
#include "sq/roots.hpp"

using json = nlohmann::ordered_json;
using namespace sq;

namespace {

const char* kVersion = "0.1.0";

// bad flags or input
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input

json read_json_arg(const std::string& s) {
    std::string text = s;
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw UsageError("cannot read " + s.substr(1));
        std::stringstream b;
        b << in.rdbuf();
        text = b.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

BoxShape parse_box(const std::string& s) {
    BoxShape b;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> b.x >> c1 >> b.y >> c2 >> b.z) || c1 != ',' || c2 != ',' || !in.eof() || b.x < 0 || b.y < 0 || b.z < 0)
        throw UsageError("box must look like 2,2,2, got '" + s + "'");
    return b;
}

PlanePartition parse_partition(const std::string& s) {
    json j = read_json_arg(s);
    try {
        return PlanePartition(j.get<std::vector<std::vector<int>>>());
    } catch (const json::exception&) {
        throw UsageError("partition must be a list of rows of integers");
    }
}

HexCoord coord_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw UsageError("hexagon must be [u,v]");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<HexCoord> parse_cells(const std::string& s) {
    json j = read_json_arg(s);
    if (!j.is_array()) throw UsageError("cells must be a list of [u,v]");
    std::vector<HexCoord> out;
    for (const auto& c : j) out.push_back(coord_of(c));
    return out;
}

// list of vertices, each three hexagons; or {"vertices": [...]}
Loop parse_loop(const std::string& s) {
    json j = read_json_arg(s);
    if (j.is_object() && j.contains("vertices")) j = j["vertices"];
    if (!j.is_array()) throw UsageError("loop must be a list of vertices");
    std::vector<HexVertex> vs;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 3) throw UsageError("vertex must be three hexagons");
        HexCoord a = coord_of(v[0]), b = coord_of(v[1]), c = coord_of(v[2]);
        if (!adjacent(a, b) || !adjacent(b, c) || !adjacent(a, c)) throw UsageError("vertex hexagons are not mutually adjacent");
        vs.push_back(make_vertex(a, b, c));
    }
    for (size_t k = 0; k < vs.size(); ++k) {
        const auto& x = vs[k];
        const auto& y = vs[(k + 1) % vs.size()];
        int common = 0;
        for (const auto& h : x) common += std::count(y.begin(), y.end(), h);
        if (common != 2) throw UsageError("consecutive loop vertices are not joined by an edge");
    }
    return make_loop(vs);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw UsageError("expected comma separated integers, got '" + s + "'");
        }
    }
    return out;
}

void check_cap(const BoxShape& b, long cap) {
    if (b.cells() > cap)
        throw UsageError("box " + b.str() + " exceeds the enumeration cap of " + std::to_string(cap) +
                         " cells (raise it with --cap)");
}

// ---- output

json j_coord(HexCoord h) { return {h.u, h.v}; }
json j_edge(const HexEdge& e) { return {j_coord(e.a), j_coord(e.b)}; }
json j_vertex(const HexVertex& v) { return {j_coord(v[0]), j_coord(v[1]), j_coord(v[2])}; }
json j_partition(const PlanePartition& p) { return p.rows(); }

json j_cells(const std::vector<HexCoord>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(j_coord(c));
    return a;
}

json j_loop(const Loop& l) {
    json vs = json::array(), es = json::array();
    for (const auto& v : l.vertices) vs.push_back(j_vertex(v));
    for (const auto& e : l.edges) es.push_back(j_edge(e));
    return {{"length", l.size()}, {"vertices", vs}, {"edges", es}, {"interior", j_cells(loop_interior(l))}};
}

json j_dd(const DoubleDimer& dd) {
    json a = json::array();
    for (const auto& [e, k] : dd.entries()) a.push_back({j_edge(e), k});
    return a;
}

template <class R>
json j_mat(const Mat2<R>& m) {
    return {{to_string(m.a), to_string(m.b)}, {to_string(m.c), to_string(m.d)}};
}

json j_decomposition(const DoubleDimer& dd) {
    auto d = decompose(dd);
    json loops = json::array(), doubled = json::array();
    for (const auto& l : d.loops) loops.push_back(j_loop(l));
    for (const auto& e : d.doubled) doubled.push_back(j_edge(e));
    return {{"doubled", doubled}, {"loops", loops}};
}

json j_placements(const std::vector<Placement>& ps) {
    json a = json::array();
    for (const auto& p : ps)
        a.push_back({{"tile", tile_catalog()[p.tile].name}, {"offset", j_coord(p.offset)}, {"coeff", to_string(p.coeff)}});
    return a;
}

json j_verdict(const ConjectureVerdict& v) {
    json j = {{"id", v.id},
              {"loop_length", v.loop.size()},
              {"interior", j_cells(v.interior)},
              {"monodromy3", j_mat(v.monodromy3)},
              {"monodromy6", j_mat(v.monodromy6)},
              {"tiling", status_name(v.tiling.status)},
              {"margin_tried", v.tiling.margin_tried},
              {"classification", classification_name(v.classification)},
              {"parity_adjusted", v.parity_adjusted}};
    if (v.tiling.certificate) {
        const auto& c = *v.tiling.certificate;
        j["certificate"] = {{"placements", j_placements(c.placements)},
                            {"stone_parity", c.stone_parity},
                            {"margin", c.margin},
                            {"parity_fixed_in_window", c.parity_fixed_in_window()},
                            {"parity_flip", j_placements(c.parity_flip)}};
    }
    if (v.tiling.invariant) {
        const auto& t = *v.tiling.invariant;
        json vals = json::array();
        for (const auto& x : t.values) vals.push_back(to_string(x));
        j["invariant"] = {{"period", t.period}, {"modulus", to_string(t.modulus)}, {"values", vals},
                          {"region_value", to_string(t.region_value)}};
    }
    return j;
}

json j_line(const CheckLine& c) {
    return {{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out) throw UsageError("write failed for " + path);
}

struct Outcome {
    json inputs = json::object();
    json result = json::object();
    std::string text;  // plain output when --json is off
    bool ok = true;    // false: verification failed
};

int criterion_for(const std::string& what) {
    static const std::map<std::string, int> names = {{"counting", 1}, {"downsample", 2},
                                                     {"transfer", 3}, {"measure", 4},  {"counts", 5},
                                                     {"zq", 6},       {"roots", 7},    {"conjecture", 8},
                                                     {"properties", 9}};
    if (auto it = names.find(what); it != names.end()) return it->second;
    if (what.size() == 1 && what[0] >= '1' && what[0] <= '9') return what[0] - '0';
    throw UsageError("unknown check '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squish map toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    bool as_json = false;
    int threads = default_threads();
    long cap = 64;
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", cap, "largest box volume xyz that may be enumerated")->check(CLI::PositiveNumber);

    std::string box, partition, loop, cells, out, weights, rst, overlay_a, overlay_b;
    std::vector<std::string> boxes{"2,2,2", "2,2,4", "4,4,4"};
    int n = 0, degree = 8, margin = kDefaultMargin, cases = 1000;
    std::uint64_t seed = 20240611;
    bool formula_only = false, q_only = false, squish_flag = false;
    std::string what = "all";

    auto* count = app.add_subcommand("count", "number of plane partitions in a box");
    count->add_option("--box", box, "x,y,z")->required();
    count->add_flag("--formula-only", formula_only, "skip the enumeration");

    auto* gf = app.add_subcommand("gf", "colored generating function of a box");
    gf->add_option("--box", box, "x,y,z")->required();
    gf->add_flag("--q-only", q_only, "single variable product formula instead");

    auto* sq = app.add_subcommand("squish", "squish the matching of a partition");
    sq->add_option("--partition", partition, "JSON rows or @file")->required();
    sq->add_option("--box", box, "fine box x,y,z with even sides; default: smallest even box");

    auto* ds = app.add_subcommand("downsample", "min and max downsampled partitions");
    ds->add_option("--partition", partition, "JSON rows or @file")->required();

    auto* mono = app.add_subcommand("monodromy", "monodromy and trace around a loop");
    auto* mono_loop = mono->add_option("--loop", loop, "JSON vertex list or @file");
    auto* mono_cells = mono->add_option("--cells", cells, "JSON list of [u,v], the loop is their boundary");
    mono_loop->excludes(mono_cells);
    mono->add_option("--n", n, "evaluate at a = b = c = primitive n-th root (1,2,3,4,6,8)");

    auto* ver = app.add_subcommand("verify", "run acceptance checks");
    ver->add_option("what", what, "all, 1-9, counting, downsample, transfer, measure, counts, zq, roots, conjecture, properties");
    ver->add_option("--seed", seed, "seed for the property checks");
    ver->add_option("--cases", cases, "cases per property check")->check(CLI::PositiveNumber);
    ver->add_option("--box", box, "with 'measure': check this fine box only and list its fibers");

    auto* zq = app.add_subcommand("zq", "series expansion of Z_Q");
    zq->add_option("--degree", degree, "cap on the graded degree")->check(CLI::NonNegativeNumber);
    zq->add_option("--weights", weights, "grading weights for q,r,s,t; default total degree");
    zq->add_option("--rst", rst, "sign,power: set r = s = t = sign * q^power");

    auto* conj = app.add_subcommand("conjecture", "signed tiling harness");
    conj->add_option("--boxes", boxes, "fine boxes whose loops are scanned");
    conj->add_option("--cells", cells, "single region instead of a scan");
    conj->add_option("--margin", margin, "window margin")->check(CLI::Range(1, kMaxMargin));

    auto* ren = app.add_subcommand("render", "SVG rendering");
    ren->add_option("--out", out, "output file")->required();
    auto* ren_part = ren->add_option("--partition", partition, "matching of this partition");
    ren->add_option("--box", box, "box for --partition, coarse box for --overlay");
    ren->add_flag("--squish", squish_flag, "draw the squished double dimer of --partition");
    auto* ren_ov = ren->add_option("--overlay", overlay_a, "first partition of an overlay pair");
    ren->add_option("--with", overlay_b, "second partition of the overlay pair");
    auto* ren_cells = ren->add_option("--cells", cells, "boundary loop of these cells");
    ren_part->excludes(ren_ov)->excludes(ren_cells);
    ren_ov->excludes(ren_cells);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::string name = app.get_subcommands().front()->get_name();
    try {
        if (*count) {
            BoxShape b = parse_box(box);
            o.inputs = {{"box", b.str()}};
            BigInt f = macmahon_box_count(b);
            o.result["formula"] = to_string(f);
            if (!formula_only) {
                check_cap(b, cap);
                long k = 0;
                for_each_boxed(b, [&](const PlanePartition&) { ++k; });
                o.result["enumerated"] = k;
                o.ok = f == k;
            }
            o.result["value"] = to_string(f);
            o.text = to_string(f) + "\n";
        } else if (*gf) {
            BoxShape b = parse_box(box);
            o.inputs = {{"box", b.str()}, {"q_only", q_only}};
            IntPoly p;
            if (q_only) p = macmahon_box_gf(b);
            else {
                check_cap(b, cap);
                p = colored_gf_box(b, threads);
            }
            o.result = {{"polynomial", p.str()}, {"terms", p.size()}};
            o.text = p.str() + "\n";
        } else if (*sq) {
            PlanePartition p = parse_partition(partition);
            BoxShape b;
            if (box.empty()) {
                auto up = [](int k) { return std::max(2, k + (k & 1)); };
                b = {up(p.num_rows()), up(p.num_cols()), up(p.max_entry())};
            } else {
                b = parse_box(box);
            }
            if (!b.even()) throw UsageError("the fine box needs even sides");
            check_cap(b.half(), cap / 8);
            o.inputs = {{"partition", j_partition(p)}, {"box", b.str()}};
            auto dd = squish_matching(matching_of(p, b));
            auto [lo, hi] = downsample(p);
            bool same = dd == overlay(matching_of(lo, b.half()), matching_of(hi, b.half()));
            o.result = {{"coarse_box", b.half().str()},
                        {"double_dimer", j_dd(dd)},
                        {"decomposition", j_decomposition(dd)},
                        {"pi_min", j_partition(lo)},
                        {"pi_max", j_partition(hi)},
                        {"equals_overlay", same}};
            o.ok = same;
            o.text = "coarse box " + b.half().str() + ", " + std::to_string(decompose(dd).loops.size()) + " loops, " +
                     std::to_string(dd.entries().size()) + " edges\npi_min " + lo.str() + "\npi_max " + hi.str() +
                     "\nequals overlay of pi_min and pi_max: " + (same ? "yes" : "no") + "\n";
        } else if (*ds) {
            PlanePartition p = parse_partition(partition);
            auto [lo, hi] = downsample(p);
            o.inputs = {{"partition", j_partition(p)}};
            o.result = {{"pi_min", j_partition(lo)}, {"pi_max", j_partition(hi)}};
            o.text = "pi_min " + lo.str() + "\npi_max " + hi.str() + "\n";
        } else if (*mono) {
            if (loop.empty() && cells.empty()) throw UsageError("give --loop or --cells");
            Loop l = loop.empty() ? loop_around(parse_cells(cells)) : parse_loop(loop);
            o.inputs = {{"loop", j_loop(l)}, {"n", n}};
            o.result["word"] = word_text(loop_steps(l));
            o.result["turn_word"] = turn_word(l);
            if (n == 0) {
                auto m = monodromy(l, symbolic_connection());
                o.result["matrix"] = j_mat(m);
                o.result["trace"] = to_string(m.trace());
                o.result["trace_rst"] = loop_trace_rst(l).str();
                o.text = "trace " + to_string(m.trace()) + "\n";
            } else {
                auto m = monodromy_at(l, n);
                o.result["order"] = connection_order(n);
                o.result["matrix"] = j_mat(m);
                o.result["trace"] = to_string(m.trace());
                o.text = "matrix " + to_string(m) + "\ntrace " + to_string(m.trace()) + "\n";
            }
        } else if (*ver && !box.empty()) {
            if (what != "measure") throw UsageError("--box only applies to 'verify measure'");
            BoxShape b = parse_box(box);
            if (!b.even()) throw UsageError("the fine box needs even sides");
            check_cap(b, cap);
            auto r = measure_check(b, threads);
            json fs = json::array();
            for (const auto& f : r.fibers)
                fs.push_back({{"target", j_dd(f.target)}, {"loops", f.loops}, {"pairs", f.pairs}, {"size", f.size},
                              {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}, {"equal", f.equal}});
            o.inputs = {{"what", what}, {"box", b.str()}};
            o.result = {{"fibers", fs},
                        {"total", r.total},
                        {"all_equal", r.all_equal},
                        {"global_equal", r.global_equal},
                        {"pair_counts_ok", r.pair_counts_ok},
                        {"fibers_within_targets", r.fibers_within_targets},
                        {"calibration", r.calibration},
                        {"gf", r.gf.str()}};
            // doubled-edge probability against the product of the single ones; reported only
            json probs = json::array();
            int agree = 0;
            for (const auto& ep : all_edge_probabilities(b)) {
                agree += ep.doubled == ep.product;
                probs.push_back({{"coarse", j_edge(ep.coarse)}, {"fine", {j_edge(ep.fine1), j_edge(ep.fine2)}},
                                 {"single", to_string(ep.single)}, {"doubled", to_string(ep.doubled)},
                                 {"product", to_string(ep.product)}});
            }
            o.result["edge_probabilities"] = probs;
            o.ok = r.all_equal && r.global_equal && r.pair_counts_ok && r.fibers_within_targets;
            o.text = std::to_string(r.fibers.size()) + " fibers, total " + std::to_string(r.total) +
                     (o.ok ? ", every fiber matches" : ", mismatch") + "; doubled-edge probability equals the product on " +
                     std::to_string(agree) + "/" + std::to_string(probs.size()) + " coarse edges\n";
        } else if (*ver) {
            AcceptanceOptions opt;
            opt.threads = threads;
            opt.seed = seed;
            opt.property_cases = cases;
            if (!as_json) opt.on_line = [](const CheckLine& c) { std::cout << format_line(c) << std::endl; };
            auto lines = what == "all" ? run_acceptance(opt) : run_criterion(criterion_for(what), opt);
            o.inputs = {{"what", what}, {"seed", seed}, {"cases", cases}};
            json a = json::array();
            int failed = 0;
            for (const auto& c : lines) {
                a.push_back(j_line(c));
                failed += !c.pass;
            }
            o.result = {{"checks", a}, {"failed", failed}, {"passed", failed == 0}};
            o.ok = failed == 0;
            o.text = std::to_string(lines.size()) + " checks, " + std::to_string(failed) + " failed\n";
        } else if (*zq) {
            SeriesBudget b{degree, weights.empty() ? std::vector<int>{} : parse_ints(weights)};
            if (!b.weights.empty() && b.weights.size() != 4) throw UsageError("--weights needs four values");
            IntPoly z = zq_series(b);
            o.inputs = {{"degree", degree}, {"weights", b.weights}};
            if (!rst.empty()) {
                auto sp = parse_ints(rst);
                if (sp.size() != 2 || (sp[0] != 1 && sp[0] != -1)) throw UsageError("--rst needs sign,power with sign +-1");
                z = specialize_rst(z, sp[0], sp[1]);
                o.inputs["rst"] = sp;
            }
            o.result = {{"series", z.str()}, {"terms", z.size()}};
            o.text = z.str() + "\n";
        } else if (*conj) {
            std::vector<ConjectureVerdict> vs;
            if (!cells.empty()) {
                auto cs = parse_cells(cells);
                o.inputs = {{"cells", j_cells(cs)}, {"margin", margin}};
                vs.push_back(conjecture_verdict(loop_around(cs), margin));
            } else {
                std::vector<BoxShape> bs;
                json jb = json::array();
                for (const auto& s : boxes) {
                    bs.push_back(parse_box(s));
                    check_cap(bs.back(), cap);
                    jb.push_back(bs.back().str());
                }
                o.inputs = {{"boxes", jb}, {"margin", margin}};
                vs = conjecture_scan(bs, margin, threads);
            }
            json a = json::array();
            std::map<std::string, int> by;
            for (const auto& v : vs) {
                a.push_back(j_verdict(v));
                ++by[classification_name(v.classification)];
            }
            o.result = {{"verdicts", a}, {"summary", by}};
            o.ok = by["counterexample"] == 0;
            o.text = std::to_string(vs.size()) + " loops";
            for (const auto& [k, c] : by) o.text += ", " + k + " " + std::to_string(c);
            o.text += "\n";
        } else if (*ren) {
            std::string svg;
            if (!partition.empty()) {
                PlanePartition p = parse_partition(partition);
                BoxShape b = box.empty() ? BoxShape{p.num_rows(), p.num_cols(), p.max_entry()} : parse_box(box);
                check_cap(b, cap);
                auto m = matching_of(p, b);
                o.inputs = {{"partition", j_partition(p)}, {"box", b.str()}, {"squish", squish_flag}};
                svg = squish_flag ? sqtool::render_double_dimer(squish_matching(m)) : sqtool::render_matching(m, region_edges(b));
            } else if (!overlay_a.empty()) {
                if (box.empty()) throw UsageError("--overlay needs --box (coarse)");
                BoxShape b = parse_box(box);
                PlanePartition p1 = parse_partition(overlay_a), p2 = parse_partition(overlay_b.empty() ? overlay_a : overlay_b);
                o.inputs = {{"overlay", {j_partition(p1), j_partition(p2)}}, {"box", b.str()}};
                svg = sqtool::render_double_dimer(overlay(matching_of(p1, b), matching_of(p2, b)));
            } else if (!cells.empty()) {
                auto cs = parse_cells(cells);
                o.inputs = {{"cells", j_cells(cs)}};
                svg = sqtool::render_loop(loop_around(cs), cs);
            } else {
                throw UsageError("render needs --partition, --overlay or --cells");
            }
            write_file(out, svg);
            o.inputs["out"] = out;
            o.result = {{"file", out}, {"bytes", svg.size()}};
            o.text = "wrote " + out + "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInvariant& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const sq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (as_json) {
        json report = {{"command", name}, {"version", kVersion}, {"inputs", o.inputs},
                       {"result", o.result}, {"ok", o.ok}, {"seconds", secs}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << o.text;
    }
    return o.ok ? 0 : 1;
}
