// Command-line front end: builds the lattice artifacts, runs the exact
// verification suites, and emits machine-readable reports. Exit codes:
// 0 success, 1 a requested verification failed, 2 invalid input or a size
// cap was exceeded.

#include <CLI11.hpp>
#include <qcube/json_io.hpp>
#include <qcube/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace {

using namespace qcube;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

struct Options {
    long q = 2;
    long n = 1;
    std::string format = "json";
    std::string out;
    std::vector<std::string> verify;
    std::vector<std::string> oracle;
    long cap = -1;  // -1 = defaults
    bool allow_q1 = false;
    unsigned long seed = 12345;
    bool quick = false;
    bool paper_map = false;
    std::string field_modulus;
};

long lattice_cap(const Options& o) {
    if (o.cap > 0) return o.cap;
    if (const char* env = std::getenv("QCUBE_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return kDefaultLatticeCap;
}

long charpoly_cap(const Options& o) { return o.cap > 0 ? o.cap : kDefaultCharpolyCap; }

std::set<std::string> as_set(const std::vector<std::string>& items) {
    std::set<std::string> s;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) s.insert(part);
    }
    return s;
}

bool wants(const std::set<std::string>& set, const std::string& name) {
    return set.count("all") > 0 || set.count(name) > 0;
}

void write_output(const Options& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path " + o.out);
    f << body;
}

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) coeffs.push_back(std::stoi(part));
    return coeffs;
}

Field make_field(const Options& o) {
    if (!o.field_modulus.empty()) return Field(o.q, parse_modulus(o.field_modulus));
    return Field(o.q);
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const Options& o) {
    Field F = make_field(o);
    std::set<std::string> verify = as_set(o.verify);
    SpectrumReport rep = spectrum_report(F, static_cast<int>(o.n), wants(verify, "charpoly"),
                                         charpoly_cap(o));
    if (o.format == "json") {
        write_output(o, spectrum_report_to_json(rep).dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream body;
        body << "k,lambda,mult\n";
        for (const auto& s : rep.pairs)
            body << s.k << "," << s.lambda.get_str() << "," << s.mult.get_str() << "\n";
        write_output(o, body.str());
    } else if (o.format == "mm") {
        if (o.out.empty()) throw std::invalid_argument("--format mm requires --out");
        IntMatrix M = adjacency_matrix(F, static_cast<int>(o.n), lattice_cap(o));
        write_output(o, matrix_market(M));
        std::ofstream idx(o.out + ".index.json", std::ios::binary);
        idx << matrix_index_json(F, subspace_order(F, static_cast<int>(o.n))).dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format " + o.format);
    }
    if (rep.charpoly_attempted && !rep.charpoly_verified) return kExitVerifyFailed;
    return kExitOk;
}

int cmd_eigenbasis(const Options& o) {
    Field F = make_field(o);
    int n = static_cast<int>(o.n);
    std::set<std::string> verify = as_set(o.verify);
    EigenTower tower = build_eigen_tower(F, n, lattice_cap(o));
    const EigenLevel& top = tower.back();

    EigenReportOptions ropts;
    bool ok = true;
    if (wants(verify, "eigen")) {
        ropts.verified_eigen = verify_eigen_residuals(top);
        ok = ok && ropts.verified_eigen;
    }
    if (wants(verify, "orthogonality")) {
        ropts.verified_orthogonality = verify_orthogonality(top);
        ok = ok && ropts.verified_orthogonality;
    }
    if (wants(verify, "counts")) {
        ropts.verified_counts = verify_counts(F, top);
        ok = ok && ropts.verified_counts;
    }
    if (wants(verify, "norms")) {
        ropts.verified_norms = verify_norm_coordinate_laws(F, tower) && verify_flip_laws(top);
        ok = ok && ropts.verified_norms;
    }
    if (wants(verify, "closed-form")) {
        ropts.verified_closed_form = verify_closed_form(F, n, top);
        ok = ok && ropts.verified_closed_form;
    }
    RadialSpanResult radial;
    if (wants(verify, "radial")) {
        radial = radial_span_solve(F, n);
        ropts.verified_radial = radial.contained;
        ropts.radial = &radial;
        ok = ok && radial.contained;
    }

    if (o.format == "json") {
        write_output(o, eigenbasis_to_json(F, top, ropts).dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream body;
        body << "index,k,lambda,support,norm_sq\n";
        int i = 0;
        for (const EigenRecord* rec : sorted_records(top)) {
            body << i++ << "," << rec->alpha.weight() << "," << rec->eigenvalue.get_str() << ","
                 << rec->v.support_size() << ",";
            Cyclotomic nsq = rec->norm_sq;
            body << (nsq.is_rational() ? to_string(nsq.rational_value()) : std::string("nonrational"))
                 << "\n";
        }
        write_output(o, body.str());
    } else {
        throw std::invalid_argument("eigenbasis supports --format json|csv");
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_trees(const Options& o) {
    int n = static_cast<int>(o.n);
    if (n < 1) throw std::invalid_argument("trees requires n >= 1");
    std::set<std::string> oracle = as_set(o.oracle);
    if (o.q == 1) {
        if (!o.allow_q1) throw std::invalid_argument("q = 1 requires --allow-q1");
        TreeCountReport rep = tree_count_report(1, n, nullptr, false, false);
        write_output(o, tree_report_to_json(rep).dump(2) + "\n");
        return rep.agreement ? kExitOk : kExitVerifyFailed;
    }
    Field F = make_field(o);
    bool with_minors = wants(oracle, "minors");
    bool with_enum = oracle.count("enumeration") > 0 || (oracle.count("all") > 0 && n <= 2);
    if (oracle.count("enumeration") > 0 && n > 2)
        throw std::invalid_argument("enumeration oracle requires n <= 2");
    TreeCountReport rep = tree_count_report(o.q, n, &F, with_minors, with_enum, lattice_cap(o));
    if (o.format == "json") {
        write_output(o, tree_report_to_json(rep).dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream body;
        body << "key,value\n";
        body << "formula," << rep.formula_value.get_str() << "\n";
        if (rep.minors_value) body << "minors," << rep.minors_value->get_str() << "\n";
        if (rep.enumeration_value) body << "enumeration," << rep.enumeration_value->get_str() << "\n";
        body << "agreement," << (rep.agreement ? "true" : "false") << "\n";
        write_output(o, body.str());
    } else if (o.format == "mm") {
        if (o.out.empty()) throw std::invalid_argument("--format mm requires --out");
        IntMatrix L = directed_laplacian(F, n, lattice_cap(o));
        write_output(o, matrix_market(L));
        std::ofstream idx(o.out + ".index.json", std::ios::binary);
        idx << matrix_index_json(F, subspace_order(F, n)).dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown format " + o.format);
    }
    return rep.agreement ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

struct CheckRow {
    std::string claim;
    std::string check;
    long q;
    int n;
    bool pass;
};

void run_config(const Field& F, int n, unsigned long seed, long cpcap, std::vector<CheckRow>& rows) {
    long q = F.q();
    auto add = [&](const std::string& claim, const std::string& check, bool pass) {
        rows.push_back({claim, check, q, n, pass});
    };

    add("lattice-enumeration", "level-counts", [&] {
        for (int k = 0; k <= n; ++k)
            if (Int(static_cast<long>(enumerate_subspaces(F, n, k).size())) != q_binomial(q, n, k))
                return false;
        return true;
    }());
    add("lattice-enumeration", "pivot-recomputation", [&] {
        for (const auto& X : subspace_order(F, n).list)
            if (pivots_via_intersections(F, X) != X.pivots()) return false;
        return true;
    }());
    add("lattice-enumeration", "canonical-stability", verify_canonical_stability(F, n, 50, seed));

    add("adjacency-matrix", "row-sums", verify_row_sums(F, n));
    add("adjacency-matrix", "detailed-balance", verify_detailed_balance(F, n));
    add("adjacency-matrix", "matrix-free-agreement", verify_matrix_free_agreement(F, n));
    add("adjacency-matrix", "self-adjointness", verify_self_adjoint_random(F, n, 100, seed));
    add("radial-reduction", "radial-action", verify_radial_action(F, n));

    if (galois_number(q, n) <= cpcap)
        add("spectrum-closed-form", "charpoly", verify_spectrum_charpoly(F, n, cpcap));
    add("spectrum-closed-form", "blocked-assembly", blocked_spectrum_check(q, n));
    {
        bool kac = true;
        for (int k = 0; k <= n; ++k) kac = kac && kac_eigen_residual_is_zero(q, n, k);
        add("kac-eigenvectors", "exact-residuals", kac);
    }

    EigenTower tower = build_eigen_tower(F, n);
    add("eigenbasis-construction", "counts", verify_counts(F, tower.back()));
    add("eigenbasis-construction", "eigen-residuals", verify_eigen_residuals(tower.back()));
    add("eigenbasis-orthogonality", "pairwise", verify_orthogonality(tower.back()));
    add("norm-coordinate-laws", "recursions", verify_norm_coordinate_laws(F, tower));
    add("norm-coordinate-laws", "flip-symmetry", verify_flip_laws(tower.back()));
    add("closed-form-vectors", "recursion-agreement", verify_closed_form(F, n, tower.back()));
    add("radial-span", "exact-solve", radial_span_solve(F, n).contained);
    add("structural-identities", "level-recursions", verify_adjacency_level_recursions(F, n));
    add("structural-identities", "lifted-matrix", verify_lifted_matrix_identity(F, n));
    add("structural-identities", "isotypic-dimensions", verify_isotypic_dimension(F, n));
    add("characters", "orthogonality", verify_character_orthogonality(F, n));

    if (n >= 1) {
        add("tree-count-product", "minors", rooted_count_via_minors(F, n) == tree_weight_formula(q, n));
        if (n <= 2)
            add("tree-count-product", "enumeration",
                rooted_count_via_enumeration(F, n) == tree_weight_formula(q, n));
        add("tree-count-product", "laplacian-spectrum", verify_laplacian_spectrum(F, n));
    }
}

int cmd_selftest(const Options& o) {
    std::vector<std::pair<long, int>> grid;
    if (o.quick) {
        grid = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
    } else {
        for (int n = 1; n <= 4; ++n) grid.emplace_back(2, n);
        for (int n = 1; n <= 3; ++n) grid.emplace_back(3, n);
        for (int n = 1; n <= 2; ++n) grid.emplace_back(4, n);
        for (int n = 1; n <= 2; ++n) grid.emplace_back(5, n);
    }

    std::vector<CheckRow> rows;
    std::set<long> qs;
    for (const auto& [q, n] : grid) qs.insert(q);
    for (long q : qs) {
        rows.push_back({"structural-identities", "galois-recurrence", q, 8, verify_goldman_rota(q, 8)});
        rows.push_back({"structural-identities", "binomial-normalization", q, 8,
                        verify_qbinomial_normalization(q, 8)});
        rows.push_back({"stationary-weights", "probability", q, 8, verify_pi_probability(q, 8)});
        Field F(q);
        rows.push_back({"cyclotomic-arithmetic", "ring-axioms", q, 0,
                        verify_cyclotomic_axioms(static_cast<int>(F.p()), 200, o.seed)});
        if (q <= 9) rows.push_back({"field-arithmetic", "axioms", q, 0, verify_field_axioms(F)});
        rows.push_back({"tree-count-product", "classical-specialization", 1, 5,
                        tree_weight_formula(1, 5) == classical_cube_count(5)});
    }
    for (const auto& [q, n] : grid) {
        Field F(q);
        run_config(F, n, o.seed, charpoly_cap(o), rows);
    }

    bool all_pass = true;
    for (const auto& r : rows) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  q=" << r.q << " n=" << r.n << "  " << r.claim
                  << " / " << r.check << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "selftest: all checks passed" : "selftest: FAILURES PRESENT") << "\n";

    if (o.paper_map) {
        std::map<std::string, std::pair<int, int>> coverage;  // claim -> (pass, total)
        for (const auto& r : rows) {
            auto& c = coverage[r.claim];
            c.second += 1;
            if (r.pass) c.first += 1;
        }
        std::cout << "\nclaim coverage\n";
        for (const auto& [claim, pt] : coverage)
            std::cout << "  " << claim << ": " << pt.first << "/" << pt.second << " checks passed\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--q", o.q, "prime power order of the base field");
    cmd->add_option("--n", o.n, "ambient dimension");
    cmd->add_option("--format", o.format, "json|csv|mm")->default_str("json");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--verify", o.verify, "verification list or 'all'");
    cmd->add_option("--oracle", o.oracle, "oracle list or 'all'");
    cmd->add_option("--cap", o.cap, "size cap override");
    cmd->add_flag("--allow-q1", o.allow_q1, "permit q = 1 (trees formula only)");
    cmd->add_option("--seed", o.seed, "seed for randomized property checks");
    cmd->add_flag("--quick", o.quick, "restrict selftest to the small grid");
    cmd->add_flag("--paper-map", o.paper_map, "print the claim coverage table");
    cmd->add_option("--field-modulus", o.field_modulus,
                    "field.modulus coefficient list, constant term first (e.g. 1,1,1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral toolkit for the q-weighted subspace-lattice adjacency matrix"};
    app.require_subcommand(1);

    Options o;
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
    CLI::App* eigen_cmd = app.add_subcommand("eigenbasis", "canonical orthogonal eigenbasis");
    CLI::App* trees_cmd = app.add_subcommand("trees", "weighted rooted spanning tree counts");
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the exact invariant suite");
    for (CLI::App* cmd : {spectrum_cmd, eigen_cmd, trees_cmd, selftest_cmd}) add_common(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (app.got_subcommand(trees_cmd)) {
            if (o.q != 1 && !QParams::is_prime_power(o.q)) {
                std::cerr << "error: q is not a prime power\n";
                return kExitInvalid;
            }
        } else if (!QParams::is_prime_power(o.q)) {
            std::cerr << "error: q is not a prime power\n";
            return kExitInvalid;
        }
        if (o.n < 0) {
            std::cerr << "error: n must be >= 0\n";
            return kExitInvalid;
        }
        if (app.got_subcommand(spectrum_cmd)) return cmd_spectrum(o);
        if (app.got_subcommand(eigen_cmd)) return cmd_eigenbasis(o);
        if (app.got_subcommand(trees_cmd)) return cmd_trees(o);
        if (app.got_subcommand(selftest_cmd)) return cmd_selftest(o);
    } catch (const qcube::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitInvalid;
}
