#include "pct/suite.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "pct/bitmatrix.hpp"
#include "pct/coloring.hpp"
#include "pct/euler.hpp"
#include "pct/generators.hpp"
#include "pct/svgplot.hpp"
#include "pct/textio.hpp"

namespace fs = std::filesystem;

namespace pct {

namespace {

struct Collector {
    std::vector<ClaimOutcome>& out;
    std::string instance_id;
    uint64_t seed;

    void hard(const std::string& claim, const std::string& predicted, const std::string& observed)
    {
        out.push_back({claim, instance_id, seed, predicted, observed, predicted == observed, true, ""});
    }
    void hard_verdict(const std::string& claim, const Verdict& v)
    {
        out.push_back({claim, instance_id, seed, "pass", v.pass ? "pass" : v.summary(), v.pass,
                       true, ""});
    }
    void informal(const std::string& claim, const std::string& predicted,
                  const std::string& observed, bool agree, const std::string& artifact = "")
    {
        out.push_back({claim, instance_id, seed, predicted, observed, agree, false, artifact});
    }
};

std::string yn(bool b)
{
    return b ? "yes" : "no";
}

void run_instance(const SuiteInstance& inst, const SuiteOptions& opt,
                  std::vector<ClaimOutcome>& outcomes,
                  std::vector<std::pair<std::string, IdentityReport>>& identity_rows,
                  std::vector<std::string>& delta_odd_instances,
                  std::vector<std::pair<std::string, std::string>>& artifacts)
{
    Collector c{outcomes, inst.id, inst.seed};

    Verdict valid = validate_triangulation(inst.l, inst.mode, inst.outer_face);
    c.hard_verdict("triangulation_valid", valid);
    if (!valid)
        return;

    ConjugateGraph cg = conjugate(inst.l, inst.mode, inst.outer_face);
    FaceClassification cls = classify_faces(cg);

    c.hard("nh_eq_ml", std::to_string(inst.l.edge_count()),
           std::to_string(cg.h.vertex_count()));

    {
        Verdict v;
        if (cls.class1_count() != cg.median_face_count)
            v.fail("class-1 count " + std::to_string(cls.class1_count()) + " != median faces " +
                   std::to_string(cg.median_face_count));
        int interior = 0;
        if (inst.mode == Mode::sphere) {
            if (cls.class2_count() != cg.l_vertex_count)
                v.fail("class-2 count != n_L");
            if (cls.unmatched_face != -1)
                v.fail("sphere conjugate has an unclassified face");
        } else {
            std::vector<char> on_boundary(cg.l_vertex_count, 0);
            for (int e = 0; e < inst.l.edge_count(); ++e)
                if (cg.external[e]) {
                    on_boundary[inst.l.edge_ends(e).first] = 1;
                    on_boundary[inst.l.edge_ends(e).second] = 1;
                }
            for (int v2 = 0; v2 < cg.l_vertex_count; ++v2)
                if (!on_boundary[v2])
                    ++interior;
            if (cls.class2_count() != interior)
                v.fail("class-2 count != interior vertices");
            if (cls.unmatched_face == -1)
                v.fail("disk conjugate lacks the outer region face");
        }
        for (auto& [f, lv] : cls.class2)
            if (cls.faces.face_length(f) != cg.l_degree[lv])
                v.fail("class-2 face " + std::to_string(f) + " length != degree of vertex " +
                       std::to_string(lv));
        c.hard_verdict("face_classes", v);
    }

    c.hard_verdict("degree_audit", degree_audit(cg).verdict);
    c.hard_verdict("face_intersection_audit", face_intersection_audit(cg, cls));
    c.hard_verdict("cut_vertex_audit", cut_vertex_audit(cg));

    EulerCircuit circuit = euler_circuit(cg, inst.seed);
    c.hard_verdict("bi_euler", verify_bi_euler(circuit, cg.h));
    OrientedConjugate oc = orient_along(cg, circuit);
    c.hard_verdict("orientation", orientation_audit(oc, cg.h));

    BitMatrix f = vertex_adjacency_matrix(oc.g);
    BitMatrix r = arc_adjacency_matrix(oc.g);

    {
        Verdict v;
        for (int i = 0; i < f.order(); ++i)
            if (inst.l.vertex_count() >= 4 && f.row_sum(i) != oc.out_degree[i])
                v.fail("F row " + std::to_string(i) + " sum != out-degree");
        for (int a = 0; a < r.order(); ++a)
            if (r.row_sum(a) != oc.out_degree[oc.g.arcs[a].second])
                v.fail("R row " + std::to_string(a) + " sum != out-degree of its head");
        c.hard_verdict("row_sums", v);
    }

    const bool simple_sphere = inst.mode == Mode::sphere && inst.l.vertex_count() >= 4;
    if (simple_sphere) {
        c.hard_verdict("antisymmetry_f", antisymmetry_check(f));
        c.hard_verdict("antisymmetry_r", antisymmetry_check(r));
    }

    QuasiOutcome qr = quasicanonical_decomposition(r);
    c.hard("r_quasicanonical", "success", qr.ok ? "success" : "failure");
    if (simple_sphere && qr.ok) {
        bool shape = qr.dec.all_blocks_2x2() &&
                     static_cast<int>(qr.dec.blocks.size()) == cg.h.vertex_count() &&
                     qr.dec.unassigned == 0;
        c.hard("r_blocks_2x2", "yes", yn(shape));
    }

    {
        ReverseOutcome rev = reverse_convert(r);
        std::string obs = "failure";
        if (rev.ok) {
            ArcIsoResult iso = check_arc_isomorphism(rev.g, oc.g);
            BitMatrix r2 = arc_adjacency_matrix(rev.g);
            obs = (iso.ok && r2 == r) ? "roundtrip" : "mismatch";
        }
        c.hard("reverse_roundtrip", "roundtrip", obs);
    }

    {
        // The circuit's own arc order is a Hamiltonian cycle of the arc-
        // adjacency digraph; check it against R directly.
        bool ham = true;
        for (size_t i = 0; i < circuit.darts.size(); ++i) {
            int a = Embedding::edge_of(circuit.darts[i]);
            int b = Embedding::edge_of(circuit.darts[(i + 1) % circuit.darts.size()]);
            ham &= r.get(a, b);
        }
        c.hard("r_circuit_hamiltonian", "yes", yn(ham));
    }

    MultiplicityAudit mult =
        multiplicity_audit(inst.mode, inst.l.vertex_count(), cg.h.vertex_count(),
                           cg.h.edge_count(), r);
    if (!mult.skipped)
        c.hard_verdict("multiplicity", mult.verdict);

    if (simple_sphere) {
        CompactnessMetrics mf = compactness_metrics(f, MatrixKind::F);
        CompactnessMetrics mr = compactness_metrics(r, MatrixKind::R);
        c.hard("sigma_f", make_rational(2, cg.h.vertex_count()).str(), mf.sigma.str());
        c.hard("sigma_r", make_rational(2, cg.h.edge_count()).str(), mr.sigma.str());
        c.hard("compactness_minimums", "yes", yn(mf.minimum_order_ok && mr.minimum_order_ok));
    }

    IdentityReport ident = identity_report(inst.l, cg, cls);
    identity_rows.emplace_back(inst.id, ident);
    if (!ident.mode_skipped) {
        for (const auto& chk : ident.checks)
            c.hard("identity." + chk.name, std::to_string(chk.rhs), std::to_string(chk.lhs));
        c.informal("delta_even_remark", "even", ident.delta_even ? "even" : "odd",
                   ident.delta_even, ident.delta_even ? "" : "artifacts/delta_parity.txt");
        if (!ident.delta_even)
            delta_odd_instances.push_back(inst.id + " (n_L=" + std::to_string(ident.n_l) +
                                          ", delta=" + std::to_string(ident.delta_l) + ")");
    }

    if (cg.h.vertex_count() <= opt.chromatic_size_cap) {
        ChromaticVerdict col = chromatic_check(cg.h, 3, opt.chromatic_size_cap);
        bool ok = col.within_cap && is_proper_coloring(cg.h, col.witness, 3);
        std::string artifact;
        if (!ok) {
            artifact = "artifacts/coloring__" + inst.id + ".txt";
            artifacts.emplace_back(artifact, instance_to_string(cg.h, std::nullopt,
                                                                "conjugate not 3-colorable"));
        }
        c.informal("three_colorable", "3-colorable", ok ? "3-colorable" : "not-3-colorable", ok,
                   artifact);
    }

    if (inst.mode == Mode::sphere) {
        for (int s = 0; s < opt.feasibility_seeds; ++s) {
            uint64_t fseed = inst.seed + s;
            OrientedConjugate oc_s = orient_along(cg, euler_circuit(cg, fseed));
            FeasibilityRecord rec =
                reverse_feasibility_claim(inst.l, vertex_adjacency_matrix(oc_s.g));
            std::string predicted = rec.predicted_infeasible ? "failure" : "candidate";
            std::string observed = rec.empirical_success ? "success" : "failure";
            std::string artifact;
            if (!rec.agreement) {
                artifact = "artifacts/reverse_feasibility__" + inst.id + "__s" +
                           std::to_string(s) + ".txt";
                artifacts.emplace_back(
                    artifact, instance_to_string(inst.l, std::nullopt,
                                                 "F decomposed although n_L >= 7; seed " +
                                                     std::to_string(fseed)) +
                                  "\n" + vertex_adjacency_matrix(oc_s.g).to_text());
            }
            ClaimOutcome row{"reverse_feasibility", inst.id, fseed, predicted, observed,
                             rec.agreement, false, artifact};
            outcomes.push_back(std::move(row));
        }
    }
}

}  // namespace

std::vector<SuiteInstance> build_corpus(const SuiteOptions& opt)
{
    std::vector<SuiteInstance> corpus;
    SplitMix64 rng(opt.seed);

    if (opt.include_triangle) {
        Embedding tri = Embedding::from_rotations({{1, 2}, {2, 0}, {0, 1}});
        corpus.push_back({"tri-n3", std::move(tri), Mode::sphere, -1, rng.next()});
    }
    for (int n = 4; n <= opt.exhaustive_max; ++n) {
        auto classes = exhaustive_sphere(n);
        for (size_t i = 0; i < classes.size(); ++i) {
            std::string id = "exh-n" + std::to_string(n) + "-c" + std::to_string(i);
            corpus.push_back({id, classes[i], Mode::sphere, -1, rng.next()});
        }
    }
    for (int i = 0; i < opt.random_count; ++i) {
        int span = std::max(1, opt.random_max_n - 3);
        int n = 4 + static_cast<int>(rng.below(span));
        uint64_t gseed = rng.next();
        Embedding t = random_flips(stacked(n, gseed), 2 * n, gseed + 1);
        char buf[32];
        std::snprintf(buf, sizeof buf, "rand-%03d-n%d", i, n);
        corpus.push_back({buf, std::move(t), Mode::sphere, -1, rng.next()});
    }
    for (int i = 0; i < opt.disk_count; ++i) {
        int boundary = 3 + 2 * i;
        DiskTriangulation d = disk_polygon(boundary, i, rng.next());
        std::string id = "disk-b" + std::to_string(boundary) + "-i" + std::to_string(i);
        corpus.push_back({id, std::move(d.embedding), Mode::disk, d.outer_face_index, rng.next()});
    }
    return corpus;
}

SuiteResult run_suite(const std::vector<SuiteInstance>& instances, const SuiteOptions& opt)
{
    SuiteResult result;
    result.instances = static_cast<int>(instances.size());

    std::vector<std::pair<std::string, IdentityReport>> identity_rows;
    std::vector<std::string> delta_odd;
    std::vector<std::pair<std::string, std::string>> artifacts;

    for (const auto& inst : instances) {
        size_t before = result.outcomes.size();
        try {
            run_instance(inst, opt, result.outcomes, identity_rows, delta_odd, artifacts);
        } catch (const std::exception& ex) {
            result.outcomes.push_back({"pipeline", inst.id, inst.seed, "completes",
                                       std::string("exception: ") + ex.what(), false, true, ""});
        }
        bool ok = true;
        for (size_t i = before; i < result.outcomes.size(); ++i) {
            const auto& o = result.outcomes[i];
            if (!o.agree) {
                if (o.hard)
                    ++result.hard_failures;
                else
                    ++result.informal_disagreements;
                ok &= !o.hard;
            }
        }
        if (opt.verbose)
            std::cout << (ok ? "   ok " : " FAIL ") << inst.id << "\n";
    }

    std::sort(result.outcomes.begin(), result.outcomes.end(),
              [](const ClaimOutcome& a, const ClaimOutcome& b) {
                  return std::tie(a.instance_id, a.claim_id, a.seed) <
                         std::tie(b.instance_id, b.claim_id, b.seed);
              });

    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        fs::create_directories(opt.out_dir + "/instances");
        fs::create_directories(opt.out_dir + "/matrices");
        fs::create_directories(opt.out_dir + "/tables");
        fs::create_directories(opt.out_dir + "/plots");
        fs::create_directories(opt.out_dir + "/artifacts");

        for (const auto& inst : instances) {
            std::optional<std::pair<int, int>> outer;
            if (inst.mode == Mode::disk && inst.outer_face >= 0) {
                FaceSet fsL = enumerate_faces(inst.l);
                int d = fsL.faces[inst.outer_face][0];
                outer = {inst.l.tail(d), inst.l.head(d)};
            }
            write_file(opt.out_dir + "/instances/" + inst.id + ".txt",
                       instance_to_string(inst.l, outer, inst.id));
            try {
                ConjugateGraph cg = conjugate(inst.l, inst.mode, inst.outer_face);
                OrientedConjugate oc = orient_along(cg, euler_circuit(cg, inst.seed));
                write_file(opt.out_dir + "/matrices/" + inst.id + ".F.txt",
                           vertex_adjacency_matrix(oc.g).to_text());
                write_file(opt.out_dir + "/matrices/" + inst.id + ".R.txt",
                           arc_adjacency_matrix(oc.g).to_text());
            } catch (const std::exception&) {
                // pipeline failure already recorded as a hard claim
            }
        }

        write_file(opt.out_dir + "/report.csv", outcomes_csv(result.outcomes));
        write_file(opt.out_dir + "/identities.csv", identities_csv(identity_rows));
        write_relation_outputs(relation_tables(opt.table_k_max), opt.out_dir);

        if (!delta_odd.empty()) {
            std::string body =
                "Instances whose cyclomatic increment nu_H - nu_L is odd.\n"
                "The increment always equals n_L, so odd n_L gives an odd increment.\n\n";
            for (const auto& line : delta_odd)
                body += line + "\n";
            write_file(opt.out_dir + "/artifacts/delta_parity.txt", body);
        }
        for (const auto& [path, body] : artifacts)
            write_file(opt.out_dir + "/" + path, body);
    }

    return result;
}

std::string outcomes_csv(const std::vector<ClaimOutcome>& outcomes)
{
    std::ostringstream os;
    os << "claim_id,instance_id,seed,predicted,observed,agree\n";
    for (const auto& o : outcomes) {
        std::string pred = o.predicted, obs = o.observed;
        for (auto* s : {&pred, &obs})
            for (auto& ch : *s)
                if (ch == ',' || ch == '\n')
                    ch = ';';
        os << o.claim_id << "," << o.instance_id << "," << o.seed << "," << pred << "," << obs
           << "," << yn(o.agree) << "\n";
    }
    return os.str();
}

std::string identities_csv(const std::vector<std::pair<std::string, IdentityReport>>& reports)
{
    std::ostringstream os;
    os << "instance_id,n_l,m_l,mu_l,n_h,m_h,mu_h1,mu_h2,nu_l,nu_h,nu_m,delta_l,k,all_pass\n";
    for (const auto& [id, r] : reports) {
        if (r.mode_skipped) {
            os << id << ",skipped,,,,,,,,,,,,\n";
            continue;
        }
        os << id << "," << r.n_l << "," << r.m_l << "," << r.mu_l << "," << r.n_h << "," << r.m_h
           << "," << r.mu_h1 << "," << r.mu_h2 << "," << r.nu_l << "," << r.nu_h << "," << r.nu_m
           << "," << r.delta_l << "," << r.k << "," << yn(r.all_pass) << "\n";
    }
    return os.str();
}

void write_relation_outputs(const RelationTables& t, const std::string& dir)
{
    auto csv_longs = [](const std::string& header, const std::vector<std::vector<long>>& cols,
                        const std::vector<Rational>* ratios = nullptr) {
        std::ostringstream os;
        os << header << "\n";
        size_t rows = cols.empty() ? (ratios ? ratios->size() : 0) : cols[0].size();
        for (size_t i = 0; i < rows; ++i) {
            for (size_t c = 0; c < cols.size(); ++c)
                os << (c ? "," : "") << cols[c][i];
            if (ratios)
                os << "," << (*ratios)[i].str();
            os << "\n";
        }
        return os.str();
    };

    write_file(dir + "/tables/counts_vs_vertices_l.csv",
               csv_longs("n_l,m_l,nu_l,nu_l_over_n_l", {t.l_n, t.l_m, t.l_nu}, &t.l_ratio));
    write_file(dir + "/tables/counts_vs_vertices_h.csv",
               csv_longs("n_h,m_h,nu_h,nu_h_over_n_h", {t.h_n, t.h_m, t.h_nu}, &t.h_ratio));
    {
        std::ostringstream os;
        os << "k,n_l,m_l,nu_l,nu_m,n_h,m_h,nu_h\n";
        for (size_t i = 0; i < t.rows.size(); ++i) {
            const auto& r = t.rows[i];
            os << r.k << "," << r.n_l << "," << t.l_m[i] << "," << t.k_nu_l[i] << ","
               << t.k_nu_m[i] << "," << r.n_h << "," << r.m_h << "," << r.nu_h << "\n";
        }
        write_file(dir + "/tables/counts_vs_k.csv", os.str());
    }

    auto pts = [](const std::vector<long>& xs, const std::vector<long>& ys) {
        PlotSeries s;
        for (size_t i = 0; i < xs.size(); ++i)
            s.points.emplace_back(static_cast<double>(xs[i]), static_cast<double>(ys[i]));
        return s;
    };
    auto rat_pts = [](const std::vector<long>& xs, const std::vector<Rational>& ys) {
        PlotSeries s;
        for (size_t i = 0; i < xs.size(); ++i)
            s.points.emplace_back(static_cast<double>(xs[i]),
                                  static_cast<double>(ys[i].num) / static_cast<double>(ys[i].den));
        return s;
    };

    {
        PlotSeries s = pts(t.l_nu, t.h_nu);
        s.label = "nu_H against nu_L";
        write_file(dir + "/plots/cyclomatic_l_vs_h.svg",
                   render_line_chart("Cyclomatic numbers of a triangulation and its conjugate",
                                     "nu_L", "nu_H", {s}));
    }
    {
        PlotSeries a = pts(t.l_n, t.l_m), b = pts(t.l_n, t.l_nu);
        a.label = "m_L";
        b.label = "nu_L";
        write_file(dir + "/plots/counts_vs_vertices_l.svg",
                   render_line_chart("Edges and cyclomatic number of L", "n_L", "count", {a, b}));
    }
    {
        PlotSeries a = pts(t.h_n, t.h_m), b = pts(t.h_n, t.h_nu);
        a.label = "m_H";
        b.label = "nu_H";
        write_file(dir + "/plots/counts_vs_vertices_h.svg",
                   render_line_chart("Edges and cyclomatic number of H", "n_H", "count", {a, b}));
    }
    {
        PlotSeries a = rat_pts(t.l_n, t.l_ratio);
        PlotSeries b;
        b.label = "nu_H / n_H (against n_L)";
        for (size_t i = 0; i < t.l_n.size(); ++i)
            b.points.emplace_back(static_cast<double>(t.l_n[i]),
                                  static_cast<double>(t.h_ratio[i].num) /
                                      static_cast<double>(t.h_ratio[i].den));
        a.label = "nu_L / n_L";
        write_file(dir + "/plots/determination_ratios.svg",
                   render_line_chart("Cycle density of L and H", "n_L", "ratio", {a, b}));
    }
    {
        PlotSeries a, b, cser;
        a.label = "n_L";
        b.label = "m_L";
        cser.label = "nu_L";
        for (size_t i = 0; i < t.rows.size(); ++i) {
            double k = static_cast<double>(t.rows[i].k);
            a.points.emplace_back(k, static_cast<double>(t.rows[i].n_l));
            b.points.emplace_back(k, static_cast<double>(t.l_m[i]));
            cser.points.emplace_back(k, static_cast<double>(t.k_nu_l[i]));
        }
        write_file(dir + "/plots/counts_vs_k_l.svg",
                   render_line_chart("L counts against k", "k", "count", {a, b, cser}));
    }
    {
        PlotSeries a, b, cser;
        a.label = "n_H";
        b.label = "m_H";
        cser.label = "nu_H";
        for (size_t i = 0; i < t.rows.size(); ++i) {
            double k = static_cast<double>(t.rows[i].k);
            a.points.emplace_back(k, static_cast<double>(t.rows[i].n_h));
            b.points.emplace_back(k, static_cast<double>(t.rows[i].m_h));
            cser.points.emplace_back(k, static_cast<double>(t.rows[i].nu_h));
        }
        write_file(dir + "/plots/counts_vs_k_h.svg",
                   render_line_chart("H counts against k", "k", "count", {a, b, cser}));
    }
}

}  // namespace pct
