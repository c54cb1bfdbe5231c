#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fuchskit/json_io.hpp"

#ifndef FUCHSKIT_CLI_PATH
#error "FUCHSKIT_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exitCode;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FUCHSKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string writeTemp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/fuchskit_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

// the dihedral sphere representation: diag(i,-i), [[0,i],[i,0]] and the
// inverse of their product
const char* kDihedralJson = R"({
  "genus": 0,
  "cusps": 3,
  "matrices": [
    [[[0,1],[0,0]],[[0,0],[0,-1]]],
    [[[0,0],[0,1]],[[0,1],[0,0]]],
    [[[0,0],[1,0]],[[-1,0],[0,0]]]
  ]
})";

} // namespace

TEST_CASE("json schemas round-trip") {
    // representation: parse, serialize, parse again, compare entries
    auto rep = fuchskit::representationFromJson(fuchskit::parseJsonText(kDihedralJson));
    auto again = fuchskit::representationFromJson(fuchskit::representationToJson(rep));
    REQUIRE(again.images.size() == rep.images.size());
    for (std::size_t i = 0; i < rep.images.size(); ++i)
        CHECK(again.images[i].distTo(rep.images[i]) < 1e-15);

    // surgery state with both point kinds
    auto state = fuchskit::SurgeryState::make(
        1, {fuchskit::MarkedPoint::cone("b", fuchskit::PiRational(4, 1)),
            fuchskit::MarkedPoint::fuchsian("f", fuchskit::ChartModel::power(fuchskit::Cplx(2.5))),
            fuchskit::MarkedPoint::fuchsian("l", fuchskit::ChartModel::parabolicLog(2))});
    auto state2 = fuchskit::surgeryStateFromJson(fuchskit::surgeryStateToJson(state));
    CHECK(state2.sameContentAs(state));
    CHECK(state2.defect == state.defect);

    fuchskit::TwinSpec twins{"b", fuchskit::TwinEndpoint::regular(),
                             fuchskit::TwinEndpoint::at("f"), fuchskit::PiRational(2, 1),
                             fuchskit::PiRational(2, 1)};
    auto twins2 = fuchskit::twinSpecFromJson(fuchskit::twinSpecToJson(twins));
    CHECK(twins2.source == twins.source);
    CHECK(twins2.end1.isRegular());
    CHECK(*twins2.end2.label == "f");
    CHECK(twins2.angleAlpha == twins.angleAlpha);
}

TEST_CASE("cli: validate reports the relation sign and classes") {
    std::string file = writeTemp("dihedral.json", kDihedralJson);
    auto r = run("--output json validate " + file);
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "validate");
    CHECK(j["results"]["relationSign"] == 1);
    REQUIRE(j["results"]["generators"].size() == 3);
    for (const auto& g : j["results"]["generators"]) {
        CHECK(g["kind"] == "non-parabolic");
        CHECK(g["alpha"][0].get<double>() == doctest::Approx(0.5));
    }
}

TEST_CASE("cli: invariants of the dihedral representation") {
    std::string file = writeTemp("dihedral.json", kDihedralJson);
    auto r = run("--output json invariants " + file);
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["k0"] == 3);
    CHECK(j["results"]["w2Parity"] == "even");
    CHECK(j["results"]["branchingParity"] == "odd");
    CHECK(j["results"]["theoremCase"] == 1);
    CHECK(j["results"]["dLowerBound"] == 1);
    // sigma^2 = tang + chi - k0 with chi = 2, k0 = 3
    CHECK(j["results"]["selfIntersectionSamples"][0]["selfIntersection"] == -1);
    CHECK(j["results"]["selfIntersectionSamples"][3]["selfIntersection"] == 2);
}

TEST_CASE("cli: reports are byte-identical across runs") {
    std::string file = writeTemp("dihedral.json", kDihedralJson);
    auto r1 = run("--output json invariants " + file);
    auto r2 = run("--output json invariants " + file);
    CHECK(r1.out == r2.out);
    auto t1 = run("invariants " + file);
    auto t2 = run("invariants " + file);
    CHECK(t1.out == t2.out);
}

TEST_CASE("cli: exit codes distinguish input and math errors") {
    CHECK(run("validate /tmp/fuchskit_cli_missing.json").exitCode == 1);

    std::string badJson = writeTemp("bad.json", "{ not json");
    CHECK(run("validate " + badJson).exitCode == 1);

    // determinant-zero matrix: input error
    std::string singular = writeTemp("singular.json", R"({
      "genus": 0, "cusps": 1,
      "matrices": [ [[[1,0],[0,0]],[[0,0],[0,0]]] ]
    })");
    CHECK(run("validate " + singular).exitCode == 1);

    // relation violated: math error
    std::string broken = writeTemp("broken.json", R"({
      "genus": 0, "cusps": 1,
      "matrices": [ [[[2,0],[0,0]],[[0,0],[0.5,0]]] ]
    })");
    CHECK(run("validate " + broken).exitCode == 2);
}

TEST_CASE("cli: chart command extracts the local chart") {
    std::string file = writeTemp("dihedral.json", kDihedralJson);
    auto r = run("--output json chart " + file + " --cusp 0 --section 0,0 1,0");
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["class"]["kind"] == "non-parabolic");
    CHECK(j["results"]["tangencyOrder"] == 1);
    CHECK(j["results"]["flipsToTransversal"] == 1);
    // chart z^(1 - 1/2) = z^(1/2)
    CHECK(j["results"]["chart"]["kind"] == "power");
    CHECK(j["results"]["chart"]["exponent"][0].get<double>() == doctest::Approx(0.5));
    CHECK(j["results"]["branchingOrder"] == 0);
}

TEST_CASE("cli: degree command cross-checks the oracle") {
    auto r = run("--output json degree --alpha 1.5");
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["degree"] == 2);
    CHECK(j["results"]["oracleGridMax"] == 2);
    CHECK(j["results"]["oracleAgrees"] == true);
    CHECK(j["results"]["hasTwins"] == true);

    auto rp = run("--output json degree --parabolic 3");
    auto jp = nlohmann::json::parse(rp.out);
    CHECK(jp["results"]["degree"] == 3);

    auto csvPath = std::string("/tmp/fuchskit_cli_strips.csv");
    auto rc = run("degree --alpha 2.0 --emit-csv " + csvPath);
    REQUIRE(rc.exitCode == 0);
    std::ifstream csv(csvPath);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "line,anchor_u,anchor_v,dir_u,dir_v,spacing");
}

TEST_CASE("cli: schwarzian command with monodromy verification") {
    auto r = run("--output json --steps 20000 schwarzian --alphas 0.3333333333333333 "
                 "0.3333333333333333 0.3333333333333333 --verify-monodromy");
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["relationCheck"] == true);
    CHECK(j["results"]["productResidualToPmId"].get<double>() < 1e-4);
    for (const auto& loop : j["results"]["loops"])
        CHECK(loop["traceError"].get<double>() < 1e-4);
}

TEST_CASE("cli: surgery round trip through files") {
    std::string state = writeTemp("state.json", R"({
      "genus": 0,
      "points": [ {"label": "p", "cone": {"num": 6, "den": 1}} ]
    })");
    std::string twins = writeTemp("twins.json", R"({
      "source": "p",
      "alpha": {"num": 4, "den": 1},
      "beta": {"num": 2, "den": 1},
      "endpoints": [null, null]
    })");
    std::string out = "/tmp/fuchskit_cli_state_out.json";
    auto r = run("--output json surgery " + state + " --move " + twins + " --out " + out);
    REQUIRE(r.exitCode == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["eSigmaConserved"] == true);
    CHECK(j["results"]["defectConserved"] == true);
    CHECK(j["results"]["eSigmaBefore"] == 2);

    std::ifstream saved(out);
    REQUIRE(saved.good());
    auto s = nlohmann::json::parse(saved);
    CHECK(s["points"].size() == 2); // q (4 pi) and the surviving 4 pi part

    // inverse move at a fuchsian point
    std::string fstate = writeTemp("fstate.json", R"({
      "genus": 0,
      "points": [ {"label": "p", "chart": {"kind": "power", "exponent": [2.5, 0]}} ]
    })");
    auto ri = run("--output json surgery " + fstate + " --inverse p");
    REQUIRE(ri.exitCode == 0);
    auto ji = nlohmann::json::parse(ri.out);
    CHECK(ji["results"]["eSigmaBefore"] == 2);
    CHECK(ji["results"]["eSigmaAfter"] == 2);
    CHECK(ji["results"]["state"]["points"].size() == 2);

    // inverse move without twins: math error exit code
    std::string lowstate = writeTemp("lowstate.json", R"({
      "genus": 0,
      "points": [ {"label": "p", "chart": {"kind": "power", "exponent": [0.5, 0]}} ]
    })");
    CHECK(run("surgery " + lowstate + " --inverse p").exitCode == 2);
}
