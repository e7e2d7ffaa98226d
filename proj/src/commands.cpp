#include "hek/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "hek/fixtures.hpp"
#include "hek/theta.hpp"

namespace hek {

Mode parse_mode(const std::string& name) {
    if (name == "exact") return Mode::Exact;
    if (name == "numeric") return Mode::Numeric;
    if (name == "auto") return Mode::Auto;
    throw std::invalid_argument("unknown mode '" + name + "' (exact|numeric|auto)");
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Exact: return "exact";
        case Mode::Numeric: return "numeric";
        default: return "auto";
    }
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string Report::digest() const {
    std::ostringstream s;
    s << std::hex << fnv1a64(command + "\n" + input.dump() + "\n" + mode_used);
    return s.str();
}

nlohmann::json Report::to_json() const {
    std::vector<CheckResult> sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    nlohmann::json jc = nlohmann::json::array();
    for (const CheckResult& c : sorted)
        jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return nlohmann::json{{"schema", "1"},        {"command", command},
                          {"input", input},       {"mode", mode_used},
                          {"digest", digest()},   {"warnings", warnings},
                          {"checks", jc},         {"payload", payload},
                          {"pass", all_pass()},   {"timing_ms", timing_ms}};
}

std::string Report::to_text() const {
    std::vector<CheckResult> sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    std::ostringstream out;
    out << command << " [" << mode_used << "] digest=" << digest() << "\n";
    for (const std::string& w : warnings) out << "  warning: " << w << "\n";
    for (const CheckResult& c : sorted) {
        out << "  " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    std::size_t passed = 0;
    for (const CheckResult& c : sorted) passed += c.pass ? 1 : 0;
    out << "  result: " << (all_pass() ? "PASS" : "FAIL") << " (" << passed << "/"
        << sorted.size() << " checks) in " << timing_ms << " ms\n";
    return out.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void add(Report& r, std::string name, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

CheckMode resolve_mode(Mode requested, const BranchData& b, Report& r) {
    switch (requested) {
        case Mode::Exact:
            if (!b.basis->independent())
                throw std::invalid_argument(
                    "exact mode needs an independent radical basis; rerun with --mode "
                    "numeric or auto");
            return CheckMode::Exact;
        case Mode::Numeric:
            return CheckMode::Numeric;
        default:
            if (b.basis->independent()) return CheckMode::Exact;
            r.warnings.push_back(
                "dependent radical basis: checks fell back to numeric evaluation");
            return CheckMode::Numeric;
    }
}

nlohmann::json rat_list(const std::array<Rat, 6>& a) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rat& v : a) out.push_back(rat_str(v));
    return out;
}

nlohmann::json key_json(const CanonicalKey& k) {
    nlohmann::json out = nlohmann::json::array();
    for (const P1Point& p : k) out.push_back(p1_str(p));
    return out;
}

nlohmann::json witness_json(const MobiusMap& m) {
    return nlohmann::json::array(
        {nlohmann::json::array({rat_str(m.a()), rat_str(m.b())}),
         nlohmann::json::array({rat_str(m.c()), rat_str(m.d())})});
}

void add_suite_checks(Report& r, const KummerSuite& s) {
    std::ostringstream residual;
    residual << "max_residual=" << s.max_identity_residual;
    add(r, "class_count", s.lines.size() == 32, std::to_string(s.lines.size()));
    add(r, "classes_distinct", s.lines_distinct);
    add(r, "line_identities", s.identities_ok, s.used_numeric ? residual.str() : "exact");
    add(r, "incidence_rule_match", s.rule_match);
    add(r, "config_valid", s.config_valid);
    add(r, "config_nondegenerate", s.config_nondegenerate);
    add(r, "node_lines_pairwise_disjoint", s.nodes_pairwise_disjoint);
    add(r, "trope_lines_pairwise_disjoint", s.tropes_pairwise_disjoint);
    add(r, "rosenhain_tetrahedra", s.tetrahedra_count == 80,
        std::to_string(s.tetrahedra_count));
}

MatQ coeffs_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("coeffs"))
        throw std::invalid_argument("curve file needs fields 'n' and 'coeffs'");
    const int n = j["n"].get<int>();
    if (n != 5)
        throw std::invalid_argument("normal form handles type 5 (got n = " +
                                    std::to_string(n) + ")");
    const auto& c = j["coeffs"];
    if (!c.is_array() || c.size() != 24)
        throw std::invalid_argument("type-5 curve needs 24 row-major coefficients");
    MatQ m(4, 6);
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 6; ++col)
            m(r, col) = parse_rat(c.at(static_cast<std::size_t>(6 * r + col)).get<std::string>());
    return m;
}

}  // namespace

Report cmd_lines(const std::array<std::string, 6>& a_text, const RunConfig& cfg) {
    Timer timer;
    Report r;
    r.command = "lines";

    std::array<Rat, 6> a;
    for (std::size_t i = 0; i < 6; ++i) a[i] = parse_rat(a_text[i]);
    r.input = {{"a", rat_list(a)}};

    const BranchData b = make_branch(a);
    const SuiteOptions opt{resolve_mode(cfg.mode, b, r), cfg.tol, cfg.parallel};
    r.mode_used = opt.mode == CheckMode::Exact ? "exact" : "numeric";

    const KummerSuite s = run_kummer_suite(b, opt);
    add_suite_checks(r, s);

    r.payload["independent_basis"] = b.basis->independent();
    r.payload["configuration"] = config_to_json(s.geometric);
    r.payload["tetrahedra_count"] = s.tetrahedra_count;
    r.timing_ms = timer.ms();
    return r;
}

Report cmd_normalize(const std::string& path, const RunConfig& cfg) {
    Timer timer;
    Report r;
    r.command = "normalize";
    r.mode_used = "exact";

    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed curve file: " + std::string(e.what()));
    }
    const MatQ m = coeffs_from_json(j);

    nlohmann::json coeff_echo = nlohmann::json::array();
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 6; ++col) coeff_echo.push_back(rat_str(m(row, col)));
    r.input = {{"file", path}, {"coeffs", coeff_echo}};

    const NormalFormResult nf = normal_form(m);
    add(r, "witness_exact", witness_holds(m, nf));

    const CanonicalKey key = canonical_key(branch_set_of(nf.branch));
    r.payload["parameters"] = rat_list(nf.branch.a);
    r.payload["canonical_key"] = key_json(key);
    nlohmann::json tj = nlohmann::json::array();
    for (int row = 0; row < 4; ++row) {
        nlohmann::json tr = nlohmann::json::array();
        for (int col = 0; col < 4; ++col) tr.push_back(rat_str(nf.transform(row, col)));
        tj.push_back(tr);
    }
    r.payload["transform"] = tj;
    nlohmann::json muj = nlohmann::json::array();
    for (const Rat& v : nf.mu) muj.push_back(rat_str(v));
    r.payload["mu"] = muj;

    if (j.contains("lambdas")) {
        std::vector<Rat> lambdas;
        for (const auto& t : j["lambdas"]) lambdas.push_back(parse_rat(t.get<std::string>()));
        const ModuliRecord rec = moduli_map_f(lambdas);
        add(r, "moduli_key_match", rec.key == key);
        r.payload["lambda_key"] = key_json(rec.key);
    }

    (void)cfg;
    r.timing_ms = timer.ms();
    return r;
}

Report cmd_iso(int n, const std::vector<std::string>& values, const RunConfig& cfg) {
    Timer timer;
    Report r;
    r.command = "iso";
    r.mode_used = "exact";

    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("moduli comparison needs odd type n >= 5");
    const std::size_t per_side = static_cast<std::size_t>(n) - 2;

    // a literal "--" splits the sides; without one the list is halved
    std::vector<std::string> flat;
    std::size_t split = 0;
    for (const std::string& v : values) {
        if (v == "--")
            split = flat.size();
        else
            flat.push_back(v);
    }
    if (split == 0) split = flat.size() / 2;
    if (split != per_side || flat.size() != 2 * per_side)
        throw std::invalid_argument("expected " + std::to_string(per_side) +
                                    " lambda values per side, got " + std::to_string(split) +
                                    " and " + std::to_string(flat.size() - split));

    std::vector<Rat> lhs, rhs;
    for (std::size_t i = 0; i < split; ++i) lhs.push_back(parse_rat(flat[i]));
    for (std::size_t i = split; i < flat.size(); ++i) rhs.push_back(parse_rat(flat[i]));

    nlohmann::json jl = nlohmann::json::array(), jr = nlohmann::json::array();
    for (const Rat& v : lhs) jl.push_back(rat_str(v));
    for (const Rat& v : rhs) jr.push_back(rat_str(v));
    r.input = {{"n", n}, {"lhs", jl}, {"rhs", jr}};

    const ModuliRecord rec_l = moduli_map_f(lhs);
    const ModuliRecord rec_r = moduli_map_f(rhs);
    const auto witness = is_isomorphic(rec_l.branch, rec_r.branch);

    add(r, "witness_verifies",
        !witness || apply(*witness, rec_l.branch) == rec_r.branch,
        witness ? "witness found" : "no witness");
    add(r, "key_witness_consistent", (rec_l.key == rec_r.key) == witness.has_value());

    r.payload["isomorphic"] = witness.has_value();
    r.payload["witness"] = witness ? witness_json(*witness) : nlohmann::json();
    r.payload["key_lhs"] = key_json(rec_l.key);
    r.payload["key_rhs"] = key_json(rec_r.key);
    r.payload["genus_pair"] =
        nlohmann::json::array({rec_l.hyper_genus, rec_l.curve_genus});

    (void)cfg;
    r.timing_ms = timer.ms();
    return r;
}

Report cmd_verify_all(const std::array<std::string, 3>& lambda_text, const RunConfig& cfg) {
    Timer timer;
    Report r;
    r.command = "verify-all";

    std::vector<Rat> lambdas;
    for (const std::string& t : lambda_text) lambdas.push_back(parse_rat(t));
    nlohmann::json jl = nlohmann::json::array();
    for (const Rat& v : lambdas) jl.push_back(rat_str(v));
    r.input = {{"lambdas", jl}};

    const CGHRForm form = make_cghr(lambdas);
    const HECurve x = from_lambda(form);
    const TypeInvariants inv = invariants_of_type(x.n());
    add(r, "invariants_type5",
        inv.degree == 16 && inv.genus == 17 && inv.moduli_dim == 3,
        "degree=16 genus=17 moduli=3");
    add(r, "genus_degree_relation", inv.genus == inv.degree * inv.degree / 16 + 1);

    const NormalFormResult nf = normal_form(x.coeffs());
    add(r, "witness_exact", witness_holds(x.coeffs(), nf));

    const SuiteOptions opt{resolve_mode(cfg.mode, nf.branch, r), cfg.tol, cfg.parallel};
    r.mode_used = opt.mode == CheckMode::Exact ? "exact" : "numeric";
    const KummerSuite s = run_kummer_suite(nf.branch, opt);
    add_suite_checks(r, s);

    const QuadricSolution tropes = recover_fourth_quadric(nf.branch, ConstraintSet::Tropes);
    const QuadricSolution nodes = recover_fourth_quadric(nf.branch, ConstraintSet::Nodes);
    add(r, "quadric_recovery_rank", tropes.rank == 16 && nodes.rank == 16,
        "rank=" + std::to_string(tropes.rank));
    add(r, "quadric_recovery_mixed_zero", tropes.mixed_all_zero && nodes.mixed_all_zero);
    add(r, "quadric_recovery_sets_agree", tropes.rref == nodes.rref);
    bool d5_ok = true;
    for (std::size_t k = 0; k < 5; ++k)
        if (tropes.d5_coeffs[k] != -nf.branch.fprime[5] / nf.branch.fprime[k]) d5_ok = false;
    add(r, "quadric_recovery_d5", d5_ok);

    // each member of the recovered family restricts to every line with
    // vanishing leading coefficient (a rational statement, exact either mode)
    bool family_ok = tropes.rank == 16 && tropes.mixed_all_zero;
    if (family_ok)
        for (int k = 0; k < 5 && family_ok; ++k) {
            std::array<Rat, 5> d_free{};
            d_free[static_cast<std::size_t>(k)] = 1;
            const GenQuadric q = quadric_from_solution(tropes, d_free);
            for (const LabeledLine& l : s.lines)
                if (!quad_on_line(q, l.line).coeff(2).is_zero()) family_ok = false;
        }
    add(r, "recovered_family_on_lines", family_ok);

    const BranchLocus locus = branch_locus(form);
    std::vector<P1Point> expected{P1Point::finite(Rat(0)), P1Point::finite(Rat(1)),
                                  P1Point::infinity()};
    for (const Rat& l : form.lambdas) expected.push_back(P1Point::finite(l));
    add(r, "branch_values_match", locus.locus == BranchSet(expected));
    std::ostringstream res;
    res << "max_residual=" << locus.max_residual;
    add(r, "branch_fiber_residuals", locus.max_residual <= cfg.tol.eps_zero, res.str());
    nlohmann::json jb = nlohmann::json::array();
    for (const P1Point& p : locus.value_by_hyperplane) jb.push_back(p1_str(p));
    r.payload["branch_values"] = jb;

    const ThetaReport theta = theta_report(x, s.geometric, cfg.tol);
    add(r, "theta_report_ok", theta.all_ok(),
        "odd=" + std::to_string(theta.odd_count) +
            " vanishing=" + std::to_string(theta.vanishing_count));
    nlohmann::json jt;
    jt["odd_count"] = theta.odd_count;
    jt["odd_structures"] = theta.odd_structures;
    jt["vanishing_count"] = theta.vanishing_count;
    jt["h0_odd_annotation"] = theta.h0_odd_annotation;
    jt["h0_vanishing_annotation"] = theta.h0_vanishing_annotation;
    jt["not_computed"] = theta.not_computed;
    nlohmann::json jdc = nlohmann::json::array();
    for (const DegreeCheck& c : theta.degree_checks)
        jdc.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok()}});
    jt["degree_checks"] = jdc;
    r.payload["theta"] = jt;

    const IntersectionLedger ledger = rosenhain_ledger();
    bool ledger_ok = true;
    for (const DegreeCheck& c : ledger.checks) ledger_ok = ledger_ok && c.ok();
    add(r, "intersection_ledger", ledger_ok,
        "D2=8 DX=" + std::to_string(ledger.dx) + " X2=" + std::to_string(ledger.x_squared) +
            " genus=" + std::to_string(ledger.genus));

    const ModuliRecord rec = moduli_map_f(form.lambdas);
    const CanonicalKey nf_key = canonical_key(branch_set_of(nf.branch));
    add(r, "moduli_key_match", rec.key == nf_key);
    r.payload["canonical_key"] = key_json(rec.key);
    r.payload["normal_form_parameters"] = rat_list(nf.branch.a);
    r.payload["genus_pair"] = nlohmann::json::array({rec.hyper_genus, rec.curve_genus});

    r.timing_ms = timer.ms();
    return r;
}

Report cmd_fixtures(std::uint64_t seed, int count, const std::string& out_path,
                    const RunConfig& cfg) {
    Timer timer;
    Report r;
    r.command = "fixtures";
    r.mode_used = "exact";
    r.input = {{"seed", seed}, {"count", count}};

    const FixtureCorpus corpus = make_fixtures(seed, count);
    add(r, "sextuple_count", static_cast<int>(corpus.sextuples.size()) == count);
    add(r, "lambda_count", static_cast<int>(corpus.lambda_triples.size()) == count);

    bool all_independent = true;
    for (const auto& a : corpus.sextuples)
        if (!make_branch(a).basis->independent()) all_independent = false;
    add(r, "sextuples_independent", all_independent);

    bool rejects_degenerate = true;
    for (const auto& a : corpus.degenerate)
        if (make_branch(a).basis->independent()) rejects_degenerate = false;
    add(r, "degenerate_side_list_consistent", rejects_degenerate,
        std::to_string(corpus.degenerate.size()) + " recorded");

    r.payload["corpus"] = corpus_to_json(corpus);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << r.payload["corpus"].dump(2) << "\n";
        add(r, "file_written", static_cast<bool>(out), out_path);
    }

    (void)cfg;
    r.timing_ms = timer.ms();
    return r;
}

}  // namespace hek
