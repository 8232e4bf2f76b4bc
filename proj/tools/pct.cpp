// pct: build conjugate triangulations, orient them along Euler circuits,
// derive the vertex/arc adjacency matrices, and verify the counting
// identities and matrix properties over generated corpora.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pct/bitmatrix.hpp"
#include "pct/coloring.hpp"
#include "pct/conjugate.hpp"
#include "pct/euler.hpp"
#include "pct/generators.hpp"
#include "pct/identities.hpp"
#include "pct/suite.hpp"
#include "pct/textio.hpp"

using namespace pct;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHardFailure = 1;
constexpr int kExitUsage = 2;

std::ostream& open_out(std::ofstream& file, const std::string& path)
{
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    return file;
}

struct LoadedInstance {
    Embedding l;
    Mode mode;
    int outer_face = -1;
};

LoadedInstance load_one(const std::string& path, const std::string& mode_str)
{
    auto parsed = parse_instances_file(path);
    if (parsed.empty())
        throw FormatError(path + " holds no instances");
    Mode mode = mode_str == "disk" ? Mode::disk : Mode::sphere;
    LoadedInstance out{std::move(parsed.front().embedding), mode, -1};
    if (mode == Mode::disk) {
        if (!parsed.front().outer_dart)
            throw FormatError("disk mode requires an '!outer: u v' directive in " + path);
        FaceSet fs = enumerate_faces(out.l);
        auto [u, v] = *parsed.front().outer_dart;
        out.outer_face = face_of_dart_pair(out.l, fs, u, v);
        if (out.outer_face < 0)
            throw FormatError("!outer names a dart that does not exist");
    }
    return out;
}

int cmd_gen(const std::string& mode, int n, int count, uint64_t seed, int flips, int boundary,
            int interior, const std::string& out_path)
{
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        if (i)
            out << "\n";
        if (mode == "disk") {
            DiskTriangulation d = disk_polygon(boundary, interior, rng.next());
            write_instance(out, d.embedding, d.outer_dart,
                           "disk boundary=" + std::to_string(boundary) +
                               " interior=" + std::to_string(interior));
        } else {
            Embedding t = stacked(n, rng.next());
            if (flips > 0)
                t = random_flips(t, flips, rng.next());
            write_instance(out, t, std::nullopt, "sphere n=" + std::to_string(n));
        }
    }
    return kExitOk;
}

int cmd_conjugate(const std::string& in_path, const std::string& mode_str,
                  const std::string& out_path, const std::string& prov_path)
{
    LoadedInstance inst = load_one(in_path, mode_str);
    ConjugateGraph cg = conjugate(inst.l, inst.mode, inst.outer_face);

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    write_instance(out, cg.h, std::nullopt,
                   "conjugate of " + in_path + " (" + mode_str + " mode)");

    if (!prov_path.empty()) {
        std::ofstream pfile;
        std::ostream& pout = open_out(pfile, prov_path);
        pout << "h_vertex,l_u,l_v\n";
        for (int q = 0; q < cg.h.vertex_count(); ++q)
            pout << q << "," << cg.vertex_origin[q].first << "," << cg.vertex_origin[q].second
                 << "\n";
    }
    return kExitOk;
}

int cmd_orient(const std::string& in_path, const std::string& mode_str, uint64_t seed,
               const std::string& out_path)
{
    LoadedInstance inst = load_one(in_path, mode_str);
    ConjugateGraph cg = conjugate(inst.l, inst.mode, inst.outer_face);
    EulerCircuit c = euler_circuit(cg, seed);
    Verdict bi = verify_bi_euler(c, cg.h);
    OrientedConjugate oc = orient_along(cg, c);

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "# euler circuit of the conjugate: tail head per step\n";
    for (int d : c.darts)
        out << cg.h.tail(d) << " " << cg.h.head(d) << "\n";
    out << "\n# arcs: id tail head\n";
    for (int a = 0; a < oc.g.arc_count(); ++a)
        out << a << " " << oc.g.arcs[a].first << " " << oc.g.arcs[a].second << "\n";
    if (!bi) {
        std::cerr << "bi-euler check failed: " << bi.summary() << "\n";
        return kExitHardFailure;
    }
    return kExitOk;
}

int cmd_matrix(const std::string& in_path, const std::string& mode_str, const std::string& kind,
               uint64_t seed, bool decompose, bool metrics, const std::string& out_path)
{
    LoadedInstance inst = load_one(in_path, mode_str);
    ConjugateGraph cg = conjugate(inst.l, inst.mode, inst.outer_face);
    OrientedConjugate oc = orient_along(cg, euler_circuit(cg, seed));
    BitMatrix m = kind == "F" ? vertex_adjacency_matrix(oc.g) : arc_adjacency_matrix(oc.g);

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << m.to_text();
    if (decompose) {
        QuasiOutcome q = quasicanonical_decomposition(m);
        if (q.ok) {
            out << "# decomposition: row-ids | column-ids\n";
            for (const auto& b : q.dec.blocks) {
                for (size_t i = 0; i < b.rows.size(); ++i)
                    out << (i ? " " : "") << b.rows[i];
                out << " |";
                for (int col : b.cols)
                    out << " " << col;
                out << "\n";
            }
        } else {
            out << "# not quasicanonical: witness rows " << q.witness_a << " " << q.witness_b
                << "\n";
        }
    }
    if (metrics) {
        CompactnessMetrics cm =
            compactness_metrics(m, kind == "F" ? MatrixKind::F : MatrixKind::R);
        out << "# sigma=" << cm.sigma.str() << " lambda=" << cm.lambda.str()
            << " minimum_order_ok=" << (cm.minimum_order_ok ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_identities(const std::string& in_path, const std::string& out_path)
{
    auto parsed = parse_instances_file(in_path);
    std::vector<std::pair<std::string, IdentityReport>> rows;
    bool all_ok = true;
    for (size_t i = 0; i < parsed.size(); ++i) {
        ConjugateGraph cg = conjugate(parsed[i].embedding, Mode::sphere);
        IdentityReport r = identity_report(parsed[i].embedding, cg, classify_faces(cg));
        all_ok &= r.all_pass;
        rows.emplace_back("instance-" + std::to_string(i), r);
    }
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << identities_csv(rows);
    return all_ok ? kExitOk : kExitHardFailure;
}

int cmd_table(int k_max, const std::string& out_path)
{
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "k,n_l,n_h,m_h,nu_h\n";
    for (const auto& row : k_table(k_max))
        out << row.k << "," << row.n_l << "," << row.n_h << "," << row.m_h << "," << row.nu_h
            << "\n";
    return kExitOk;
}

int cmd_suite(const SuiteOptions& opt)
{
    auto corpus = build_corpus(opt);
    SuiteResult res = run_suite(corpus, opt);
    std::cout << res.instances << " instances processed, " << res.hard_failures
              << " hard failures, " << res.informal_disagreements
              << " informal disagreements\n";
    for (const auto& o : res.outcomes)
        if (!o.agree)
            std::cout << (o.hard ? "FAIL " : "warn ") << o.instance_id << " " << o.claim_id
                      << ": predicted " << o.predicted << ", observed " << o.observed << "\n";
    return res.exit_code(opt.strict_claims);
}

int cmd_case(int which, uint64_t seed, int case3_n)
{
    if (which == 1) {
        Embedding tri = Embedding::from_rotations({{1, 2}, {2, 0}, {0, 1}});
        ConjugateGraph cg = conjugate(tri, Mode::sphere);
        IdentityReport r = identity_report(tri, cg, classify_faces(cg));
        std::cout << "k=1 map of three countries\n"
                  << "n_L=" << r.n_l << " n_H=" << r.n_h << " m_H=" << r.m_h << " nu_H=" << r.nu_h
                  << "\n"
                  << "distinct neighbors per conjugate vertex: 2\n"
                  << "conjugate contains 2-cycles: " << (cg.has_two_cycle() ? "yes" : "no") << "\n";
        return r.all_pass && cg.has_two_cycle() ? kExitOk : kExitHardFailure;
    }
    if (which == 2) {
        Embedding k4 = Embedding::from_rotations(tetrahedron_rotations());
        ConjugateGraph cg = conjugate(k4, Mode::sphere);
        IdentityReport r = identity_report(k4, cg, classify_faces(cg));
        OrientedConjugate oc = orient_along(cg, euler_circuit(cg, seed));
        BitMatrix rm = arc_adjacency_matrix(oc.g);
        std::cout << "k=2 tetrahedron\n"
                  << "n_L=" << r.n_l << " n_H=" << r.n_h << " m_H=" << r.m_h << " nu_H=" << r.nu_h
                  << " sum(R)=" << rm.total_ones() << "\n";
        return r.all_pass && rm.total_ones() == 24 ? kExitOk : kExitHardFailure;
    }
    // Case 3: everything from n_L = 5 up is the general situation; run a
    // seeded batch and print the ledger fields per instance.
    SplitMix64 rng(seed);
    bool ok = true;
    std::cout << "k>=3 batch\n"
              << "n_l,n_h,m_h,nu_l,nu_h,all_identities\n";
    for (int n = 5; n < 5 + case3_n; ++n) {
        Embedding t = random_flips(stacked(n, rng.next()), 2 * n, rng.next());
        ConjugateGraph cg = conjugate(t, Mode::sphere);
        IdentityReport r = identity_report(t, cg, classify_faces(cg));
        ok &= r.all_pass;
        std::cout << r.n_l << "," << r.n_h << "," << r.m_h << "," << r.nu_l << "," << r.nu_h << ","
                  << (r.all_pass ? "pass" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitHardFailure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"conjugate triangulation toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate triangulations");
    std::string gen_mode = "sphere", gen_out;
    int gen_n = 8, gen_count = 1, gen_flips = 0, gen_boundary = 6, gen_interior = 0;
    uint64_t gen_seed = 1;
    gen->add_option("--mode", gen_mode)->check(CLI::IsMember({"sphere", "disk"}));
    gen->add_option("--n", gen_n, "vertex count (sphere)");
    gen->add_option("--count", gen_count);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--flips", gen_flips, "random flips after stacking");
    gen->add_option("--boundary", gen_boundary, "polygon size (disk)");
    gen->add_option("--interior", gen_interior, "interior points (disk)");
    gen->add_option("--out", gen_out, "output file, - for stdout");

    // conjugate
    auto* conj = app.add_subcommand("conjugate", "build the conjugate of a triangulation");
    std::string conj_in, conj_mode = "sphere", conj_out, conj_prov;
    conj->add_option("--in", conj_in)->required();
    conj->add_option("--mode", conj_mode)->check(CLI::IsMember({"sphere", "disk"}));
    conj->add_option("--out", conj_out);
    conj->add_option("--provenance", conj_prov, "write vertex -> edge table");

    // orient
    auto* orient = app.add_subcommand("orient", "Euler circuit and orientation of the conjugate");
    std::string orient_in, orient_mode = "sphere", orient_out;
    uint64_t orient_seed = 0;
    orient->add_option("--in", orient_in)->required();
    orient->add_option("--mode", orient_mode)->check(CLI::IsMember({"sphere", "disk"}));
    orient->add_option("--seed", orient_seed);
    orient->add_option("--out", orient_out);

    // matrix
    auto* matrix = app.add_subcommand("matrix", "vertex or arc adjacency matrix of the pipeline");
    std::string mat_in, mat_mode = "sphere", mat_kind = "R", mat_out;
    uint64_t mat_seed = 0;
    bool mat_decompose = false, mat_metrics = false;
    matrix->add_option("--in", mat_in)->required();
    matrix->add_option("--mode", mat_mode)->check(CLI::IsMember({"sphere", "disk"}));
    matrix->add_option("--kind", mat_kind)->check(CLI::IsMember({"F", "R"}));
    matrix->add_option("--seed", mat_seed);
    matrix->add_flag("--decompose", mat_decompose);
    matrix->add_flag("--metrics", mat_metrics);
    matrix->add_option("--out", mat_out);

    // identities
    auto* ident = app.add_subcommand("identities", "identity ledger for sphere instances");
    std::string ident_in, ident_out;
    ident->add_option("--in", ident_in)->required();
    ident->add_option("--out", ident_out);

    // table
    auto* table = app.add_subcommand("table", "closed-form k table");
    int table_k = 10;
    std::string table_out;
    table->add_option("--k-max", table_k);
    table->add_option("--out", table_out);

    // suite
    auto* suite = app.add_subcommand("suite", "full claims suite over a generated corpus");
    SuiteOptions opt;
    suite->add_option("--exhaustive", opt.exhaustive_max, "exhaustive classes up to this n");
    suite->add_flag("--triangle", opt.include_triangle, "include the single triangle");
    suite->add_option("--random", opt.random_count);
    suite->add_option("--random-max-n", opt.random_max_n);
    suite->add_option("--disks", opt.disk_count);
    suite->add_option("--seed", opt.seed);
    suite->add_option("--out", opt.out_dir);
    suite->add_flag("--strict-claims", opt.strict_claims,
                    "informal-claim disagreements also fail the run");
    suite->add_flag("--verbose", opt.verbose);

    // case
    auto* casecmd = app.add_subcommand("case", "reproduce the three worked cases");
    int case_n = 0, case3_count = 8;
    uint64_t case_seed = 1;
    casecmd->add_option("number", case_n)->required()->check(CLI::Range(1, 3));
    casecmd->add_option("--seed", case_seed);
    casecmd->add_option("--count", case3_count, "instances for case 3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return kExitOk;  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_mode, gen_n, gen_count, gen_seed, gen_flips, gen_boundary,
                           gen_interior, gen_out);
        if (conj->parsed())
            return cmd_conjugate(conj_in, conj_mode, conj_out, conj_prov);
        if (orient->parsed())
            return cmd_orient(orient_in, orient_mode, orient_seed, orient_out);
        if (matrix->parsed())
            return cmd_matrix(mat_in, mat_mode, mat_kind, mat_seed, mat_decompose, mat_metrics,
                              mat_out);
        if (ident->parsed())
            return cmd_identities(ident_in, ident_out);
        if (table->parsed())
            return cmd_table(table_k, table_out);
        if (suite->parsed())
            return cmd_suite(opt);
        if (casecmd->parsed())
            return cmd_case(case_n, case_seed, case3_count);
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHardFailure;
    }
    return kExitUsage;
}
