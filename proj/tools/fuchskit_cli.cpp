// Command-line front end: parses representation and surgery files, runs the
// analyses and emits deterministic text or JSON reports.
//
// Exit codes: 0 success, 1 input error, 2 violated mathematical precondition.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fuchskit/devgeo.hpp"
#include "fuchskit/invariants.hpp"
#include "fuchskit/json_io.hpp"
#include "fuchskit/riccati.hpp"
#include "fuchskit/schwarzian.hpp"
#include "fuchskit/surgery.hpp"

namespace {

using fuchskit::Cplx;
using fuchskit::Json;

struct GlobalOpts {
    double tol = 1e-9;
    long steps = 100000;
    std::string output = "text";
};

struct Report {
    std::string command;
    std::string inputsDigest;
    Json results = Json::object();
    std::vector<std::string> warnings;
    std::vector<std::string> textLines;

    void line(const std::string& s) { textLines.push_back(s); }
};

void emitReport(const Report& r, const GlobalOpts& g) {
    if (g.output == "json") {
        Json j;
        j["command"] = r.command;
        j["inputsDigest"] = r.inputsDigest;
        j["tolerances"] = Json{{"tol", g.tol}, {"steps", g.steps}};
        j["results"] = r.results;
        j["warnings"] = r.warnings;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "== " << r.command << " ==\n";
    for (const auto& l : r.textLines) std::cout << l << "\n";
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

std::string readFileBytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fuchskit::fail(fuchskit::ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Cplx parseComplexArg(const std::string& s) {
    std::istringstream is(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) fuchskit::fail(fuchskit::ErrorKind::ParseError,
                                    "cannot parse complex number '" + s + "' (use re or re,im)");
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            fuchskit::fail(fuchskit::ErrorKind::ParseError,
                           "cannot parse complex number '" + s + "' (use re or re,im)");
    }
    return Cplx(re, im);
}

std::string fmtCplx(Cplx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string kindName(fuchskit::ElementKind k) {
    switch (k) {
    case fuchskit::ElementKind::Trivial: return "trivial";
    case fuchskit::ElementKind::Parabolic: return "parabolic";
    case fuchskit::ElementKind::NonParabolic: return "non-parabolic";
    }
    return "?";
}

std::string parityName(fuchskit::Parity p) {
    return p == fuchskit::Parity::Even ? "even" : "odd";
}

Json classToJson(const fuchskit::MonodromyClass& cls) {
    Json j;
    j["kind"] = kindName(cls.kind);
    if (cls.kind == fuchskit::ElementKind::NonParabolic)
        j["alpha"] = fuchskit::cplxToJson(cls.alpha);
    if (cls.kind == fuchskit::ElementKind::Parabolic)
        j["translationLength"] = fuchskit::cplxToJson(cls.translationLength);
    return j;
}

// ---------------------------------------------------------------- validate

int cmdValidate(const std::string& file, const GlobalOpts& g) {
    std::string bytes = readFileBytes(file);
    auto rep = fuchskit::representationFromJson(fuchskit::parseJsonText(bytes));
    Report r;
    r.command = "validate";
    r.inputsDigest = fuchskit::fnv1aDigest(bytes);

    int sign = fuchskit::validateRelation(rep, g.tol);
    r.results["relationSign"] = sign;
    r.line("relation product: " + std::string(sign > 0 ? "+Id" : "-Id"));

    Json gens = Json::array();
    for (int i = 0; i < rep.presentation.generatorCount(); ++i) {
        auto cls = fuchskit::classify(rep.images[i], g.tol);
        Json gj = classToJson(cls);
        gj["label"] = rep.presentation.generatorLabel(i);
        gens.push_back(gj);
        std::string extra;
        if (cls.kind == fuchskit::ElementKind::NonParabolic)
            extra = ", alpha = " + fmtCplx(cls.alpha);
        if (cls.kind == fuchskit::ElementKind::Parabolic)
            extra = ", translation = " + fmtCplx(cls.translationLength);
        r.line("  " + rep.presentation.generatorLabel(i) + ": " + kindName(cls.kind) + extra);
    }
    r.results["generators"] = std::move(gens);
    emitReport(r, g);
    return 0;
}

// -------------------------------------------------------------- invariants

int cmdInvariants(const std::string& file, const GlobalOpts& g) {
    std::string bytes = readFileBytes(file);
    auto rep = fuchskit::representationFromJson(fuchskit::parseJsonText(bytes));
    Report r;
    r.command = "invariants";
    r.inputsDigest = fuchskit::fnv1aDigest(bytes);

    auto summary = fuchskit::localMonodromies(rep, g.tol);
    auto w2 = fuchskit::w2Parity(rep, g.tol);
    auto bp = fuchskit::branchingParity(rep, g.tol);
    int tcase = fuchskit::theoremCase(rep, g.tol);
    int chi = 2 - 2 * rep.presentation.genus;

    r.results["k0"] = summary.k0;
    r.results["w2Parity"] = parityName(w2);
    r.results["branchingParity"] = parityName(bp);
    r.results["theoremCase"] = tcase;
    r.results["dLowerBound"] = fuchskit::dLowerBound(rep, g.tol);
    Json samples = Json::array();
    for (int tang = 0; tang <= 3; ++tang)
        samples.push_back(Json{{"tang", tang},
                               {"selfIntersection", fuchskit::selfIntersection(tang, chi, summary.k0)}});
    r.results["selfIntersectionSamples"] = std::move(samples);

    r.line("k0 (cusps with non-trivial monodromy): " + std::to_string(summary.k0));
    r.line("w2 parity: " + parityName(w2));
    r.line("branching parity e(sigma): " + parityName(bp));
    r.line("odd-branching case: " + std::to_string(tcase) + (tcase ? "" : " (none)"));
    r.line("d(rho) lower bound: " + std::to_string(fuchskit::dLowerBound(rep, g.tol)));
    for (int tang = 0; tang <= 3; ++tang)
        r.line("  sigma^2 at tang " + std::to_string(tang) + ": " +
               std::to_string(fuchskit::selfIntersection(tang, chi, summary.k0)));
    emitReport(r, g);
    return 0;
}

// ------------------------------------------------------------------- chart

fuchskit::SectionGerm sectionFromArgs(const std::vector<std::string>& coeffTokens, int pole) {
    std::vector<Cplx> coeffs;
    for (const auto& t : coeffTokens) coeffs.push_back(parseComplexArg(t));
    if (coeffs.empty()) coeffs.push_back(Cplx(1.0));
    if (pole > 0) return fuchskit::SectionGerm::pole(pole, fuchskit::PowerSeries(coeffs));
    // leading zeros of the coefficient list give the vanishing order
    std::size_t lead = 0;
    while (lead < coeffs.size() && std::abs(coeffs[lead]) == 0.0) ++lead;
    if (lead == coeffs.size())
        fuchskit::fail(fuchskit::ErrorKind::InvalidInput, "--section: all coefficients vanish");
    std::vector<Cplx> unit(coeffs.begin() + lead, coeffs.end());
    if (lead == 0) return fuchskit::SectionGerm::finite(fuchskit::PowerSeries(unit));
    return fuchskit::SectionGerm::zero(static_cast<int>(lead), fuchskit::PowerSeries(unit));
}

int cmdChart(const std::string& file, int cusp, const std::vector<std::string>& coeffTokens,
             int pole, const GlobalOpts& g) {
    std::string bytes = readFileBytes(file);
    auto rep = fuchskit::representationFromJson(fuchskit::parseJsonText(bytes));
    if (cusp < 0 || cusp >= rep.presentation.cuspCount)
        fuchskit::fail(fuchskit::ErrorKind::InvalidInput,
                       "--cusp index out of range (0-based, " +
                           std::to_string(rep.presentation.cuspCount) + " cusps)");
    Report r;
    r.command = "chart";
    r.inputsDigest = fuchskit::fnv1aDigest(bytes);

    auto cls = fuchskit::classify(rep.cusp(cusp), g.tol);
    auto model = fuchskit::minimalModel(cls);
    auto section = sectionFromArgs(coeffTokens, pole);
    auto state = fuchskit::makeState(model, section);

    r.results["cusp"] = cusp;
    r.results["class"] = classToJson(cls);
    r.results["localModel"] = Json{{"oneForm", model.oneForm()},
                                   {"firstIntegral", model.firstIntegral()}};
    r.results["tangencyOrder"] = state.tangencyOrder;
    r.line("cusp " + std::to_string(cusp) + ": " + kindName(cls.kind));
    r.line("local model: " + model.oneForm() + " = 0");
    r.line("first integral: " + model.firstIntegral());
    r.line("tangency order: " + std::to_string(state.tangencyOrder));

    fuchskit::ChartModel chart;
    bool flippedFirst = false;
    try {
        chart = fuchskit::chartFromSection(state);
    } catch (const fuchskit::Error& e) {
        if (e.kind() != fuchskit::ErrorKind::NonPositiveCoverOrder) throw;
        flippedFirst = true;
        chart = fuchskit::chartFromSection(fuchskit::flipToTransversal(state).finalState);
    }
    auto trans = fuchskit::flipToTransversal(state);
    r.results["flipsToTransversal"] = trans.onSectionFlips;
    r.results["residualTangency"] = trans.residualTangency;
    r.results["chart"] = fuchskit::chartToJson(chart);
    if (flippedFirst)
        r.warnings.push_back("section met the singular locus with non-positive cover order; "
                             "chart extracted after flipping to the transversal model");
    if (chart.kind == fuchskit::ChartKind::Power) {
        r.results["branchingOrder"] = chart.branchingOrder();
        r.results["alphaZero"] = fuchskit::cplxToJson(chart.alphaZero());
        r.line("chart: z^(" + fmtCplx(chart.exponent) + "), n_p = " +
               std::to_string(chart.branchingOrder()) + ", alpha0 = " + fmtCplx(chart.alphaZero()));
    } else if (chart.kind == fuchskit::ChartKind::ParabolicLog) {
        r.results["branchingOrder"] = chart.branchingOrder();
        r.line("chart: log z" +
               (chart.index ? " + z^(-" + std::to_string(chart.index) + ")" : std::string()) +
               ", n_p = " + std::to_string(chart.branchingOrder()));
    } else {
        r.results["branchingOrder"] = chart.branchingOrder();
        r.line("chart: branched cover z^" + std::to_string(chart.index) + ", n_p = " +
               std::to_string(chart.branchingOrder()));
    }
    r.line("on-section flips to transversal: " + std::to_string(trans.onSectionFlips));
    emitReport(r, g);
    return 0;
}

// ------------------------------------------------------------------ degree

int cmdDegree(const std::string& alphaArg, int parabolicN, int grid,
              const std::string& csvPath, const GlobalOpts& g) {
    Report r;
    r.command = "degree";

    if (parabolicN >= 0) {
        auto chart = fuchskit::ChartModel::parabolicLog(parabolicN);
        auto d = fuchskit::chartDegree(chart);
        r.inputsDigest = fuchskit::fnv1aDigest("parabolic:" + std::to_string(parabolicN));
        r.results["chart"] = fuchskit::chartToJson(chart);
        r.results["degree"] = d.degree;
        r.results["hasTwins"] = fuchskit::hasTwins(chart);
        r.line("chart log z + z^(-" + std::to_string(parabolicN) + ")");
        r.line("degree: " + std::to_string(d.degree));
        r.line(std::string("twins: ") + (fuchskit::hasTwins(chart) ? "yes" : "no"));
        emitReport(r, g);
        return 0;
    }

    Cplx alpha = parseComplexArg(alphaArg);
    r.inputsDigest = fuchskit::fnv1aDigest("alpha:" + alphaArg);
    auto chart = fuchskit::ChartModel::power(alpha);
    auto d = fuchskit::chartDegree(chart);
    r.results["chart"] = fuchskit::chartToJson(chart);
    if (d.annulus) {
        r.results["degree"] = nullptr;
        r.results["annulusCase"] = true;
        r.line("Re alpha = 0: annulus case, no degree assigned");
    } else {
        int oracle = fuchskit::maxPreimagesOnGrid(alpha, grid);
        r.results["degree"] = d.degree;
        r.results["annulusCase"] = false;
        r.results["oracleGridMax"] = oracle;
        r.results["oracleAgrees"] = (oracle == d.degree);
        r.results["hasTwins"] = fuchskit::hasTwins(chart);
        r.line("degree of z^(" + fmtCplx(chart.exponent) + "): " + std::to_string(d.degree));
        r.line("preimage-count oracle on a " + std::to_string(grid) + "x" + std::to_string(grid) +
               " grid: " + std::to_string(oracle) +
               (oracle == d.degree ? " (agrees)" : " (MISMATCH)"));
        r.line(std::string("twins: ") + (fuchskit::hasTwins(chart) ? "yes" : "no"));
    }

    auto strip = fuchskit::stripDecomposition(alpha);
    r.results["strip"] = Json{{"annulus", strip.annulus},
                              {"direction", fuchskit::cplxToJson(strip.direction)},
                              {"spacing", strip.spacing},
                              {"halfPlane", strip.halfPlane}};
    r.line("strip spacing 2*pi/|alpha| = " + std::to_string(strip.spacing));

    if (!csvPath.empty()) {
        std::ofstream csv(csvPath);
        if (!csv)
            fuchskit::fail(fuchskit::ErrorKind::InvalidInput, "cannot write '" + csvPath + "'");
        csv << "line,anchor_u,anchor_v,dir_u,dir_v,spacing\n";
        for (const auto& row : fuchskit::stripLineRows(alpha, 8)) {
            csv << row[0];
            for (int i = 1; i < 6; ++i) csv << "," << (row[i] + 0.0); // +0.0 folds -0 into 0
            csv << "\n";
        }
        r.line("strip line data written to " + csvPath);
    }
    emitReport(r, g);
    return 0;
}

// --------------------------------------------------------------- schwarzian

int cmdSchwarzian(const std::vector<std::string>& alphaTokens, bool verifyMonodromy,
                  const std::string& baseArg, const GlobalOpts& g) {
    if (alphaTokens.size() != 3)
        fuchskit::fail(fuchskit::ErrorKind::InvalidInput, "--alphas needs exactly three values");
    Cplx a0 = parseComplexArg(alphaTokens[0]);
    Cplx a1 = parseComplexArg(alphaTokens[1]);
    Cplx aInf = parseComplexArg(alphaTokens[2]);

    Report r;
    r.command = "schwarzian";
    r.inputsDigest =
        fuchskit::fnv1aDigest(alphaTokens[0] + "|" + alphaTokens[1] + "|" + alphaTokens[2]);

    auto qd = fuchskit::triangleDifferential(a0, a1, aInf);
    bool rel = fuchskit::relationCheck(a0, a1, aInf, g.tol);
    r.results["coefficients"] = Json{{"doublePoleAt0", fuchskit::cplxToJson(qd.coeff0())},
                                     {"doublePoleAt1", fuchskit::cplxToJson(qd.coeff1())},
                                     {"mixedTerm", fuchskit::cplxToJson(qd.coeffMixed())}};
    r.results["relationCheck"] = rel;
    r.line("coefficient at z^-2 (0):   " + fmtCplx(qd.coeff0()));
    r.line("coefficient at (z-1)^-2:   " + fmtCplx(qd.coeff1()));
    r.line("mixed term coefficient:    " + fmtCplx(qd.coeffMixed()));
    r.line(std::string("alpha sum integral: ") + (rel ? "yes" : "no"));

    if (verifyMonodromy) {
        Cplx base = baseArg.empty() ? Cplx(0.0, 2.0) : parseComplexArg(baseArg);
        auto m0 = fuchskit::odeMonodromy(qd, fuchskit::Loop::Around0, base, g.steps);
        auto m1 = fuchskit::odeMonodromy(qd, fuchskit::Loop::Around1, base, g.steps);
        auto mInf = fuchskit::odeMonodromy(qd, fuchskit::Loop::AroundInf, base, g.steps);
        auto prod = m0 * m1 * mInf;
        double residual = std::min(prod.distTo(fuchskit::MoebiusElement::identity()),
                                   prod.distTo(fuchskit::MoebiusElement::identity().negated()));
        Json loops = Json::array();
        const Cplx alphas[3] = {a0, a1, aInf};
        const fuchskit::MoebiusElement* ms[3] = {&m0, &m1, &mInf};
        const char* names[3] = {"around0", "around1", "aroundInf"};
        bool allMatch = true;
        for (int i = 0; i < 3; ++i) {
            Cplx tr = ms[i]->trace();
            Cplx expected = 2.0 * std::cos(fuchskit::kPi * alphas[i]);
            double err = std::min(std::abs(tr - expected), std::abs(tr + expected));
            allMatch = allMatch && err < 1e-4;
            loops.push_back(Json{{"loop", names[i]},
                                 {"trace", fuchskit::cplxToJson(tr)},
                                 {"expectedAbsTrace", std::abs(expected)},
                                 {"traceError", err}});
            std::ostringstream os;
            os << "loop " << names[i] << ": trace " << fmtCplx(tr) << ", |2cos(pi a)| = "
               << std::abs(expected) << ", error " << err;
            r.line(os.str());
        }
        r.results["loops"] = std::move(loops);
        r.results["productResidualToPmId"] = residual;
        std::ostringstream os;
        os << "three-loop product distance to +-Id: " << residual;
        r.line(os.str());
        if (!rel && residual < 1e-4 && allMatch)
            r.warnings.push_back(
                "monodromies satisfy the loop relation although the alpha sum is not an "
                "integer; the integrality reading depends on the normalization of the alphas");
    }
    emitReport(r, g);
    return 0;
}

// ----------------------------------------------------------------- surgery

int cmdSurgery(const std::string& stateFile, const std::string& twinsFile,
               const std::string& inverseLabel, const std::string& outFile,
               const GlobalOpts& g) {
    std::string bytes = readFileBytes(stateFile);
    auto state = fuchskit::surgeryStateFromJson(fuchskit::parseJsonText(bytes));
    Report r;
    r.command = "surgery";

    long eBefore = fuchskit::eSigmaOfState(state);
    fuchskit::PiRational defectBefore = state.defect;
    fuchskit::SurgeryState after = state;
    bool defectShouldHold = true;

    if (!twinsFile.empty()) {
        std::string tb = readFileBytes(twinsFile);
        r.inputsDigest = fuchskit::fnv1aDigest(bytes + tb);
        auto twins = fuchskit::twinSpecFromJson(fuchskit::parseJsonText(tb));
        auto moved = fuchskit::moveBranchPoint(state, twins);
        after = moved.state;
        r.results["returnTwins"] = fuchskit::twinSpecToJson(moved.returnTwins);
        r.line("moved branch point '" + twins.source + "'");
    } else if (!inverseLabel.empty()) {
        r.inputsDigest = fuchskit::fnv1aDigest(bytes + "#" + inverseLabel);
        auto res = fuchskit::inverseMoveAtFuchsian(state, inverseLabel);
        after = res.state;
        defectShouldHold = false; // the shed 2 pi moves into the cone ledger
        r.results["newBranchPoint"] = res.branchLabel;
        r.line("inverse move at '" + inverseLabel + "', new simple branch point '" +
               res.branchLabel + "'");
    } else {
        fuchskit::fail(fuchskit::ErrorKind::InvalidInput,
                       "surgery: provide --move TWINS.json or --inverse LABEL");
    }

    long eAfter = fuchskit::eSigmaOfState(after);
    r.results["eSigmaBefore"] = eBefore;
    r.results["eSigmaAfter"] = eAfter;
    r.results["defectBefore"] = fuchskit::piRationalToJson(defectBefore);
    r.results["defectAfter"] = fuchskit::piRationalToJson(after.defect);
    r.results["eSigmaConserved"] = (eBefore == eAfter);
    r.results["defectConserved"] = (defectBefore == after.defect);
    r.results["state"] = fuchskit::surgeryStateToJson(after);
    r.line("e(sigma): " + std::to_string(eBefore) + " -> " + std::to_string(eAfter) +
           (eBefore == eAfter ? " (conserved)" : " (CHANGED)"));
    std::string defectNote = defectBefore == after.defect
                                 ? " (conserved)"
                                 : (defectShouldHold ? " (CHANGED)"
                                                     : " (shed angle joined the cone ledger)");
    r.line("defect of the cone points (pi units): " + std::to_string(defectBefore.num) + "/" +
           std::to_string(defectBefore.den) + " -> " + std::to_string(after.defect.num) + "/" +
           std::to_string(after.defect.den) + defectNote);

    if (!outFile.empty()) {
        std::ofstream out(outFile);
        if (!out)
            fuchskit::fail(fuchskit::ErrorKind::InvalidInput, "cannot write '" + outFile + "'");
        out << fuchskit::surgeryStateToJson(after).dump(2) << "\n";
        r.line("new state written to " + outFile);
    }
    emitReport(r, g);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of PSL2(C) monodromies and projective structures "
                 "with fuchsian-type singularities"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after the subcommand too

    GlobalOpts g;
    app.add_option("--tol", g.tol, "classification tolerance")->capture_default_str();
    app.add_option("--steps", g.steps, "ODE integration steps")->capture_default_str();
    app.add_option("--output", g.output, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string repFile;
    auto* validate = app.add_subcommand("validate", "relation sign and per-generator classes");
    validate->add_option("file", repFile, "representation JSON file")->required();

    std::string invFile;
    auto* invariants = app.add_subcommand("invariants", "k0, parities and the d(rho) bound");
    invariants->add_option("file", invFile, "representation JSON file")->required();

    std::string chartFile;
    int chartCusp = 0;
    std::vector<std::string> sectionCoeffs;
    int sectionPole = 0;
    auto* chart = app.add_subcommand("chart", "local model and chart from a section germ");
    chart->add_option("file", chartFile, "representation JSON file")->required();
    chart->add_option("--cusp", chartCusp, "cusp index (0-based)")->required();
    chart->add_option("--section", sectionCoeffs,
                      "section coefficients c0 c1 ... (each re or re,im)");
    chart->add_option("--pole", sectionPole, "pole order (coefficients become the unit)");

    std::string alphaArg;
    int parabolicN = -1;
    int grid = 32;
    std::string csvPath;
    auto* degree = app.add_subcommand("degree", "chart degree with the preimage oracle");
    degree->add_option("--alpha", alphaArg, "exponent of z^alpha (re or re,im)");
    degree->add_option("--parabolic", parabolicN, "index n of log z + z^-n");
    degree->add_option("--grid", grid, "oracle grid size")->capture_default_str();
    degree->add_option("--emit-csv", csvPath, "write strip-decomposition line data as CSV");

    std::vector<std::string> alphaTokens;
    bool verifyMonodromy = false;
    std::string baseArg;
    auto* schwarzian = app.add_subcommand("schwarzian", "three-cusp quadratic differential");
    schwarzian->add_option("--alphas", alphaTokens, "a0 a1 aInf (each re or re,im)")
        ->expected(3)
        ->required();
    schwarzian->add_flag("--verify-monodromy", verifyMonodromy, "integrate the loop monodromies");
    schwarzian->add_option("--base", baseArg, "base point for the loops (re or re,im)");

    std::string stateFile, twinsFile, inverseLabel, outFile;
    auto* surgery = app.add_subcommand("surgery", "move branch points / inverse move");
    surgery->add_option("state", stateFile, "surgery state JSON file")->required();
    surgery->add_option("--move", twinsFile, "twins JSON file");
    surgery->add_option("--inverse", inverseLabel, "label of the z^alpha point");
    surgery->add_option("--out", outFile, "write the new state here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (*validate) return cmdValidate(repFile, g);
        if (*invariants) return cmdInvariants(invFile, g);
        if (*chart) return cmdChart(chartFile, chartCusp, sectionCoeffs, sectionPole, g);
        if (*degree) {
            if (alphaArg.empty() && parabolicN < 0)
                fuchskit::fail(fuchskit::ErrorKind::InvalidInput,
                               "degree: provide --alpha or --parabolic");
            return cmdDegree(alphaArg, parabolicN, grid, csvPath, g);
        }
        if (*schwarzian) return cmdSchwarzian(alphaTokens, verifyMonodromy, baseArg, g);
        if (*surgery) return cmdSurgery(stateFile, twinsFile, inverseLabel, outFile, g);
    } catch (const fuchskit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.isInputError() ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
