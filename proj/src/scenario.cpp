#include "modcalc/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "modcalc/parser.hpp"

namespace modcalc {

namespace {

const std::vector<std::string> kCheckNames = {
    "jacobi", "modular", "modular_transition", "foliated_modular", "reeb",
    "divergence_form", "casimir", "casimir_member", "casimir_cocycle",
    "mods_reeb", "is_coupling", "decompose", "structure_equations",
    "coupling_modular", "gauge", "gauge_relations", "unimodularity_certificate",
    "hamiltonian_certificate", "flat_coupling_build", "property_suite"};

int coord_index(const Chart& chart, const std::string& name) {
    for (int i = 0; i < chart.dim(); ++i)
        if (chart.coords[i] == name) return i;
    throw UnresolvedReference("coordinate '" + name + "'");
}

Point parse_point(const Json& j, int dim) {
    if (!j.is_array() || (int)j.size() != dim)
        throw SyntaxError("sample point must be an array of " + std::to_string(dim) +
                          " rationals");
    Point pt;
    for (const auto& v : j) pt.push_back(parse_rational(v.get<std::string>()));
    return pt;
}

std::vector<Point> parse_points(const Json& j, int dim) {
    std::vector<Point> out;
    if (j.is_null()) return out;
    for (const auto& p : j) out.push_back(parse_point(p, dim));
    return out;
}

} // namespace

Json tensor_to_json(const Tensor& t) {
    Json comps = Json::array();
    for (const auto& [idx, c] : t.components()) {
        Json entry;
        Json indices = Json::array();
        for (int i : idx) indices.push_back(t.chart().coords[i]);
        entry["indices"] = indices;
        entry["coeff"] = c.to_string(t.chart().coords);
        comps.push_back(entry);
    }
    Json out;
    out["kind"] = t.variance() == Variance::form ? "form" : "multivector";
    out["frame"] = t.frame() == FrameKind::adapted ? "adapted" : "coordinate";
    out["components"] = comps;
    return out;
}

Tensor tensor_from_json(const Json& j, const Chart& chart) {
    std::string kind = j.value("kind", "multivector");
    std::string frame = j.value("frame", "coordinate");
    Variance v = kind == "form" ? Variance::form
                : kind == "multivector"
                    ? Variance::multivector
                    : throw SyntaxError("tensor kind must be form or multivector");
    FrameKind f = frame == "adapted" ? FrameKind::adapted
                  : frame == "coordinate"
                      ? FrameKind::coordinate
                      : throw SyntaxError("frame must be coordinate or adapted");
    Tensor t(chart, v, f);
    if (!j.contains("components")) return t;
    for (const auto& entry : j.at("components")) {
        MultiIndex idx;
        for (const auto& name : entry.at("indices"))
            idx.push_back(coord_index(chart, name.get<std::string>()));
        t.add_component(idx, parse_scalar(entry.at("coeff").get<std::string>(),
                                          chart.coords));
    }
    return t;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError("cannot open scenario file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError("scenario is not valid JSON: " + std::string(e.what()));
    }

    Scenario sc;
    sc.source_path = path;
    const Json& chart = doc.at("chart");
    const Json horiz = chart.value("horizontal", Json::array());
    for (const auto& name : horiz)
        sc.split.horizontal.push_back(name.get<std::string>());
    for (const auto& name : chart.at("vertical"))
        sc.split.vertical.push_back(name.get<std::string>());
    sc.split.validate();
    const Chart full = sc.split.chart();
    const int n = full.dim(), p = sc.split.p(), q = sc.split.q();

    sc.gamma = ConnectionForm::flat(sc.split);
    if (doc.contains("connection")) {
        const Json& g = doc.at("connection");
        if ((int)g.size() != p)
            throw SyntaxError("connection matrix needs " + std::to_string(p) + " rows");
        for (int i = 0; i < p; ++i) {
            if ((int)g[i].size() != q)
                throw SyntaxError("connection row needs " + std::to_string(q) + " entries");
            for (int a = 0; a < q; ++a)
                sc.gamma.gamma[i][a] =
                    parse_scalar(g[i][a].get<std::string>(), full.coords);
        }
    }

    const Json scalars = doc.value("scalars", Json::object());
    for (const auto& [name, expr] : scalars.items())
        sc.scalars.emplace(name, parse_scalar(expr.get<std::string>(), full.coords));

    const Json tensors = doc.value("tensors", Json::object());
    for (const auto& [name, tj] : tensors.items())
        sc.tensors.emplace(name, tensor_from_json(tj, full));

    const Json volumes = doc.value("volumes", Json::object());
    for (const auto& [name, vj] : volumes.items()) {
        std::string kind = vj.value("kind", "top");
        ScalarFunction g = parse_scalar(vj.at("coeff").get<std::string>(), full.coords);
        MultiIndex idx;
        FrameKind frame = FrameKind::adapted;
        int grade = 0;
        if (kind == "top") {
            for (int i = 0; i < n; ++i) idx.push_back(i);
            frame = FrameKind::coordinate;
            grade = n;
        } else if (kind == "leafwise") {
            for (int a = 0; a < q; ++a) idx.push_back(p + a);
            grade = q;
        } else if (kind == "transversal") {
            for (int i = 0; i < p; ++i) idx.push_back(i);
            grade = p;
        } else {
            throw SyntaxError("volume kind must be top, leafwise or transversal");
        }
        VolumeForm vf{Tensor::monomial(full, Variance::form, frame, idx, g),
                      parse_points(vj.value("samples", Json()), n)};
        vf.validate(grade); // includes the sample nonvanishing claims
        sc.volumes.emplace(name, vf);
        sc.assertions.push_back("volume '" + name + "' asserted nowhere vanishing (" +
                                std::to_string(vf.samples.size()) +
                                " witness point(s) checked)");
    }

    const Json extra_claims = doc.value("assertions", Json::array());
    for (const auto& a : extra_claims)
        sc.assertions.push_back(a.get<std::string>());

    sc.checks = doc.value("checks", Json::array());
    for (const auto& ch : sc.checks) {
        std::string name = ch.at("check").get<std::string>();
        if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end())
            throw UnknownCheckName("'" + name + "'");
        // Resolve references eagerly so load fails fast.
        for (const char* key : {"bivector", "mu", "sigma0", "form"})
            if (ch.contains(key) && !sc.tensors.count(ch.at(key).get<std::string>()))
                throw UnresolvedReference("tensor '" + ch.at(key).get<std::string>() + "'");
        for (const char* key : {"volume", "leafwise", "transversal"})
            if (ch.contains(key) && !sc.volumes.count(ch.at(key).get<std::string>()))
                throw UnresolvedReference("volume '" + ch.at(key).get<std::string>() + "'");
    }
    return sc;
}

namespace {

struct CheckContext {
    const Scenario& sc;
    uint64_t seed;
    Chart chart;

    const Tensor& tensor(const Json& ch, const std::string& key) const {
        auto it = sc.tensors.find(ch.at(key).get<std::string>());
        if (it == sc.tensors.end())
            throw UnresolvedReference("tensor '" + ch.at(key).get<std::string>() + "'");
        return it->second;
    }
    const VolumeForm& volume(const Json& ch, const std::string& key) const {
        auto it = sc.volumes.find(ch.at(key).get<std::string>());
        if (it == sc.volumes.end())
            throw UnresolvedReference("volume '" + ch.at(key).get<std::string>() + "'");
        return it->second;
    }
    ScalarFunction scalar(const Json& ch, const std::string& key) const {
        std::string text = ch.at(key).get<std::string>();
        auto it = sc.scalars.find(text);
        if (it != sc.scalars.end()) return it->second;
        return parse_scalar(text, chart.coords);
    }
    PoissonBivector bivector(const Json& ch, const std::string& key = "bivector") const {
        return PoissonBivector::make(tensor(ch, key));
    }
    std::vector<Point> samples(const Json& ch) const {
        if (!ch.contains("samples")) return {};
        std::vector<Point> out;
        for (const auto& pj : ch.at("samples")) {
            Point pt;
            for (const auto& v : pj) pt.push_back(parse_rational(v.get<std::string>()));
            if ((int)pt.size() != chart.dim())
                throw SyntaxError("sample point has wrong dimension");
            out.push_back(pt);
        }
        return out;
    }
};

std::string render_tensor(const Tensor& t) { return t.to_string(); }

void expect_tensor(CheckOutcome& out, const CheckContext& ctx, const Json& ch,
                   const std::string& key, const Tensor& computed,
                   const std::string& what) {
    out.details.push_back(what + " = " + render_tensor(computed));
    if (!ch.contains(key)) {
        out.status = CheckStatus::pass;
        out.message = what + " computed";
        return;
    }
    Tensor expected = ctx.tensor(ch, key);
    if (expected.frame() != computed.frame())
        expected = expected.with_frame(computed.frame());
    if (expected.variance() != computed.variance())
        expected = expected.with_variance(computed.variance());
    if ((computed - expected).is_zero()) {
        out.status = CheckStatus::pass;
        out.message = what + " matches the expected tensor";
    } else {
        out.status = CheckStatus::fail;
        out.message = what + " differs from the expected tensor";
        out.details.push_back("residual = " + render_tensor(computed - expected));
    }
}

void expect_bool(CheckOutcome& out, const Json& ch, bool value,
                 const std::string& what) {
    bool expected = ch.value("expect", true);
    out.message = what + (value ? ": true" : ": false");
    out.status = value == expected ? CheckStatus::pass : CheckStatus::fail;
}

CheckOutcome run_check(const CheckContext& ctx, const Json& ch) {
    std::string name = ch.at("check").get<std::string>();
    CheckOutcome out;
    out.label = ch.value("label", name);
    const Scenario& sc = ctx.sc;

    if (name == "jacobi") {
        expect_bool(out, ch, jacobi_check(ctx.tensor(ch, "bivector")), "[Pi,Pi] = 0");
    } else if (name == "modular") {
        PoissonBivector Pi = ctx.bivector(ch);
        Tensor Z = modular_field(Pi, ctx.volume(ch, "volume"));
        expect_tensor(out, ctx, ch, "expect", Z, "modular field");
    } else if (name == "modular_transition") {
        PoissonBivector Pi = ctx.bivector(ch);
        bool ok = modular_transition_check(Pi, ctx.volume(ch, "volume"),
                                           ctx.scalar(ch, "factor"));
        expect_bool(out, ch, ok, "modular transition rule");
    } else if (name == "foliated_modular") {
        PoissonFoliationData pf =
            PoissonFoliationData::make(ctx.bivector(ch), sc.split);
        Tensor Z = foliated_modular_field(pf, ctx.volume(ch, "leafwise"), sc.gamma);
        expect_tensor(out, ctx, ch, "expect", Z, "foliated modular field");
    } else if (name == "reeb") {
        Tensor lambda = reeb_form(ctx.volume(ch, "transversal"), sc.gamma);
        if (!d_components(lambda, sc.gamma).d01.is_zero()) {
            out.status = CheckStatus::fail;
            out.message = "Reeb form is not d01-closed";
        } else {
            expect_tensor(out, ctx, ch, "expect", lambda, "Reeb form");
        }
    } else if (name == "divergence_form") {
        Tensor theta = divergence_form(ctx.volume(ch, "leafwise"), sc.gamma);
        expect_tensor(out, ctx, ch, "expect", theta, "divergence form");
    } else if (name == "casimir") {
        bool ok = is_casimir(ctx.bivector(ch), ctx.scalar(ch, "function"));
        expect_bool(out, ch, ok, "Casimir");
    } else if (name == "casimir_member") {
        PoissonFoliationData pf =
            PoissonFoliationData::make(ctx.bivector(ch), sc.split);
        bool ok = casimir_complex_member(ctx.tensor(ch, "form"), pf, sc.gamma);
        expect_bool(out, ch, ok, "de Rham-Casimir membership");
    } else if (name == "casimir_cocycle") {
        PoissonFoliationData pf =
            PoissonFoliationData::make(ctx.bivector(ch), sc.split);
        Tensor theta = ch.contains("divergence_of")
                           ? divergence_form(ctx.volume(ch, "divergence_of"), sc.gamma)
                           : ctx.tensor(ch, "form");
        bool ok = casimir_cocycle_check(theta, pf, sc.gamma);
        expect_bool(out, ch, ok, "de Rham-Casimir 1-cocycle");
    } else if (name == "mods_reeb") {
        PoissonFoliationData pf =
            PoissonFoliationData::make(ctx.bivector(ch), sc.split);
        bool ok = mods_reeb_identity_check(pf, ctx.volume(ch, "leafwise"),
                                           ctx.volume(ch, "transversal"), sc.gamma);
        expect_bool(out, ch, ok, "modular/Reeb decomposition");
    } else if (name == "is_coupling") {
        CouplingTest t =
            is_coupling(ctx.bivector(ch), sc.split, ctx.samples(ch));
        out.details.push_back(std::string("generically: ") +
                              (t.generically ? "yes" : "no"));
        out.details.push_back(std::string("at samples: ") +
                              (t.at_samples ? "yes" : "no"));
        expect_bool(out, ch, t.ok(), "coupling condition");
    } else if (name == "decompose") {
        GeometricData gd = decompose(ctx.bivector(ch), sc.split);
        out.status = CheckStatus::pass;
        out.message = "decomposed into (gamma, sigma, P)";
        out.details.push_back("sigma = " + render_tensor(gd.sigma));
        out.details.push_back("P = " + render_tensor(gd.P.P.bivector));
        if (ch.contains("expect_sigma") &&
            !(gd.sigma - ctx.tensor(ch, "expect_sigma").with_frame(FrameKind::adapted))
                 .is_zero()) {
            out.status = CheckStatus::fail;
            out.message = "sigma differs from the expected coupling form";
        }
        if (ch.contains("expect_P") &&
            !(gd.P.P.bivector - ctx.tensor(ch, "expect_P")).is_zero()) {
            out.status = CheckStatus::fail;
            out.message = "P differs from the expected vertical part";
        }
        if (ch.contains("expect_gamma")) {
            const Json& g = ch.at("expect_gamma");
            for (int i = 0; i < sc.split.p(); ++i)
                for (int a = 0; a < sc.split.q(); ++a)
                    if (gd.gamma.gamma[i][a] !=
                        parse_scalar(g[i][a].get<std::string>(), ctx.chart.coords)) {
                        out.status = CheckStatus::fail;
                        out.message = "connection differs from the expected Gamma";
                    }
        }
        if (ch.contains("roundtrip") && ch.at("roundtrip").get<bool>()) {
            if (!(reconstruct(gd).bivector - ctx.tensor(ch, "bivector")).is_zero()) {
                out.status = CheckStatus::fail;
                out.message = "reconstruct(decompose(Pi)) != Pi";
            }
        }
    } else if (name == "structure_equations") {
        GeometricData gd = decompose(ctx.bivector(ch), sc.split);
        CouplingReport rep = structure_equations_check(gd);
        out.message = std::string("SE0 ") + (rep.se0_ok ? "ok" : "FAILED") +
                      ", SE1 " + (rep.se1_ok ? "ok" : "FAILED") + ", SE2 " +
                      (rep.se2_ok ? "ok" : "FAILED") + ", Jacobi " +
                      (rep.jacobi_ok ? "ok" : "FAILED");
        for (const auto& [what, r] : rep.residuals)
            out.details.push_back("residual " + what + " = " + render_tensor(r));
        out.status = rep.all_ok() ? CheckStatus::pass : CheckStatus::fail;
    } else if (name == "coupling_modular") {
        GeometricData gd = decompose(ctx.bivector(ch), sc.split);
        ModularDecomposition md =
            modular_decomposition_check(gd, ctx.volume(ch, "leafwise"));
        out.details.push_back("Z = " + render_tensor(md.Z));
        out.details.push_back("Z_{1,0} = " + render_tensor(md.Z10));
        out.details.push_back("Z_{0,1} = " + render_tensor(md.Z01));
        out.status = md.ok() ? CheckStatus::pass : CheckStatus::fail;
        out.message = md.ok() ? "bigraded modular decomposition verified"
                              : "bigraded modular decomposition FAILED";
        if (ch.contains("expect"))
            expect_tensor(out, ctx, ch, "expect", md.Z, "modular field");
    } else if (name == "gauge") {
        PoissonBivector Pi = ctx.bivector(ch);
        PoissonBivector Pi_t =
            gauge_transform(Pi, ctx.tensor(ch, "mu"), ctx.samples(ch));
        out.details.push_back("gauged bivector = " + render_tensor(Pi_t.bivector));
        bool ok = Pi_t.jacobi_verified;
        std::string why = ok ? "" : "Jacobi failed";
        if (ok && ch.value("coupling", true)) {
            CouplingTest t = is_coupling(Pi_t, sc.split, ctx.samples(ch));
            if (!t.generically) {
                ok = false;
                why = "gauge output is not coupling";
            } else {
                GeometricData gd = decompose(Pi, sc.split);
                GeometricData gd_t = decompose(Pi_t, sc.split);
                if (!(gd_t.P.P.bivector - gd.P.P.bivector).is_zero()) {
                    ok = false;
                    why = "vertical part changed under the gauge";
                }
            }
        }
        out.status = ok ? CheckStatus::pass : CheckStatus::fail;
        out.message = ok ? "gauge transform valid" : why;
    } else if (name == "gauge_relations") {
        PoissonBivector Pi = ctx.bivector(ch);
        bool ok = gauge_relations_check(Pi, ctx.tensor(ch, "mu"),
                                        ctx.volume(ch, "leafwise"), sc.split,
                                        ctx.samples(ch));
        expect_bool(out, ch, ok, "gauge transition identities");
    } else if (name == "unimodularity_certificate") {
        GeometricData gd = decompose(ctx.bivector(ch), sc.split);
        UnimodularityCertificate cert =
            unimodularity_certificate(gd, ctx.volume(ch, "leafwise"));
        out.details.push_back(std::string("Z_P^tau = 0: ") +
                              (cert.zp_zero ? "yes" : "no"));
        out.details.push_back(std::string("d10(tau) = 0: ") +
                              (cert.theta_closed_zero ? "yes" : "no"));
        out.message = "verdict: " + cert.verdict;
        if (ch.contains("expect")) {
            std::string want = ch.at("expect").get<std::string>();
            bool matches = (want == "certified" && cert.certified()) ||
                           (want == "inconclusive" && !cert.certified());
            out.status = !matches               ? CheckStatus::fail
                         : cert.certified()     ? CheckStatus::pass
                                                : CheckStatus::inconclusive;
        } else {
            out.status = cert.certified() ? CheckStatus::pass
                                          : CheckStatus::inconclusive;
        }
    } else if (name == "hamiltonian_certificate") {
        PoissonBivector Pi = ctx.bivector(ch);
        const VolumeForm& Omega = ctx.volume(ch, "volume");
        bool ok;
        if (ch.contains("certificate_form"))
            ok = hamiltonian_certificate(Pi, Omega,
                                         ctx.tensor(ch, "certificate_form"));
        else
            ok = hamiltonian_certificate(Pi, Omega, ctx.scalar(ch, "certificate"));
        expect_bool(out, ch, ok, "Hamiltonian certificate");
    } else if (name == "flat_coupling_build") {
        PoissonBivector P = ctx.bivector(ch, "P");
        std::optional<LeafData> leaf;
        if (ch.contains("leaf")) {
            LeafData ld{{}, ctx.tensor(ch.at("leaf"), "base_form")
                                .with_frame(FrameKind::adapted)};
            const Json leaf_samples = ch.at("leaf").value("samples", Json::array());
            for (const auto& pj : leaf_samples) {
                Point pt;
                for (const auto& v : pj)
                    pt.push_back(parse_rational(v.get<std::string>()));
                ld.leaf_samples.push_back(pt);
            }
            leaf = ld;
        }
        FlatCouplingResult res = flat_coupling_build(
            sc.split, ctx.tensor(ch, "sigma0").with_frame(FrameKind::adapted), P,
            ctx.samples(ch), leaf);
        out.details.push_back("reconstructed Pi = " +
                              render_tensor(reconstruct(res.data).bivector));
        out.status = res.report.all_ok() ? CheckStatus::pass : CheckStatus::fail;
        out.message = res.report.all_ok()
                          ? "flat coupling structure built; structure equations hold"
                          : "flat coupling structure fails a structure equation";
    } else if (name == "property_suite") {
        std::string suite = ch.at("name").get<std::string>();
        uint64_t seed = ch.value("seed", ctx.seed);
        int cases = ch.value("cases", 50);
        SuiteResult r = run_property_suite(suite, seed, cases);
        out.message = "suite '" + suite + "': " + std::to_string(r.cases) +
                      " cases, " + std::to_string(r.failures) + " failure(s)";
        if (!r.passed()) out.details.push_back("first failure: " + r.detail);
        out.status = r.passed() ? CheckStatus::pass : CheckStatus::fail;
    } else {
        throw UnknownCheckName("'" + name + "'");
    }
    return out;
}

} // namespace

bool Report::any_failure() const {
    for (const auto& o : outcomes)
        if (o.status == CheckStatus::fail || o.status == CheckStatus::error)
            return true;
    return false;
}

int Report::counts(CheckStatus s) const {
    int n = 0;
    for (const auto& o : outcomes)
        if (o.status == s) ++n;
    return n;
}

Report run_scenario(const Scenario& scenario, uint64_t seed, bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.scenario_path = scenario.source_path;
    rep.seed = seed;
    rep.assumptions = scenario.assertions;

    CheckContext ctx{scenario, seed, scenario.split.chart()};
    auto safe_run = [&ctx](const Json& ch) -> CheckOutcome {
        try {
            return run_check(ctx, ch);
        } catch (const Error& e) {
            CheckOutcome out;
            out.label = ch.value("label", ch.value("check", "?"));
            out.status = CheckStatus::error;
            out.message = e.what();
            return out;
        } catch (const std::exception& e) {
            CheckOutcome out;
            out.label = ch.value("label", ch.value("check", "?"));
            out.status = CheckStatus::error;
            out.message = std::string("internal error: ") + e.what();
            return out;
        }
    };

    if (parallel) {
        std::vector<std::future<CheckOutcome>> futures;
        for (const auto& ch : scenario.checks)
            futures.push_back(std::async(std::launch::async, safe_run, ch));
        for (auto& f : futures) rep.outcomes.push_back(f.get());
    } else {
        for (const auto& ch : scenario.checks)
            rep.outcomes.push_back(safe_run(ch));
    }

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
    default: return "ERROR";
    }
}

} // namespace

std::string emit_text(const Report& report) {
    std::ostringstream os;
    os << "scenario: " << report.scenario_path << "\n";
    os << "seed: " << report.seed << "\n\n";
    for (const auto& o : report.outcomes) {
        os << "CHECK " << o.label << ": " << status_name(o.status) << "\n";
        if (!o.message.empty()) os << "  " << o.message << "\n";
        for (const auto& d : o.details) os << "  " << d << "\n";
    }
    if (!report.assumptions.empty()) {
        os << "\nassumption ledger:\n";
        for (const auto& a : report.assumptions) os << "  - " << a << "\n";
    }
    os << "\nsummary: " << report.counts(CheckStatus::pass) << " pass, "
       << report.counts(CheckStatus::fail) << " fail, "
       << report.counts(CheckStatus::inconclusive) << " inconclusive, "
       << report.counts(CheckStatus::error) << " error\n";
    os << "elapsed: " << report.elapsed_ms << " ms\n";
    return os.str();
}

std::string emit_structured(const Report& report) {
    Json j;
    j["scenario"] = report.scenario_path;
    j["seed"] = report.seed;
    Json checks = Json::array();
    for (const auto& o : report.outcomes) {
        Json cj;
        cj["label"] = o.label;
        cj["status"] = status_name(o.status);
        cj["message"] = o.message;
        cj["details"] = o.details;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["assumptions"] = report.assumptions;
    Json summary;
    summary["pass"] = report.counts(CheckStatus::pass);
    summary["fail"] = report.counts(CheckStatus::fail);
    summary["inconclusive"] = report.counts(CheckStatus::inconclusive);
    summary["error"] = report.counts(CheckStatus::error);
    j["summary"] = summary;
    // No timing here: structured reports are byte-reproducible.
    return j.dump(2) + "\n";
}

int report_exit_code(const Report& report) { return report.any_failure() ? 1 : 0; }

std::vector<std::string> list_scenarios(const std::string& dir) {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".scn")
            out.push_back(entry.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace modcalc
