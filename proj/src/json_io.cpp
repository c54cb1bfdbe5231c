#include "fuchskit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace fuchskit {

Json cplxToJson(Cplx z) { return Json::array({z.real(), z.imag()}); }

Cplx cplxFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(ErrorKind::ParseError, "expected a complex number as [re, im]");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

Json matrixToJson(const MoebiusElement& m) {
    return Json::array({Json::array({cplxToJson(m.a), cplxToJson(m.b)}),
                        Json::array({cplxToJson(m.c), cplxToJson(m.d)})});
}

namespace {

MoebiusElement matrixFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(ErrorKind::ParseError, "expected a 2x2 matrix as [[a,b],[c,d]]");
    Cplx a = cplxFromJson(j[0][0]), b = cplxFromJson(j[0][1]);
    Cplx c = cplxFromJson(j[1][0]), d = cplxFromJson(j[1][1]);
    if (!isFiniteC(a) || !isFiniteC(b) || !isFiniteC(c) || !isFiniteC(d))
        fail(ErrorKind::ParseError, "matrix entries must be finite");
    Cplx det = a * d - b * c;
    if (std::abs(det) < 1e-12)
        fail(ErrorKind::ParseError, "matrix determinant magnitude too close to zero");
    return MoebiusElement(a, b, c, d); // ctor rescales to det 1
}

} // namespace

SurfaceRepresentation representationFromJson(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "representation file must be a JSON object");
    if (!j.contains("genus") || !j.contains("cusps") || !j.contains("matrices"))
        fail(ErrorKind::ParseError, "representation file needs genus, cusps and matrices");
    if (!j["genus"].is_number_integer() || !j["cusps"].is_number_integer())
        fail(ErrorKind::ParseError, "genus and cusps must be integers");

    SurfacePresentation pres;
    pres.genus = j["genus"].get<int>();
    pres.cuspCount = j["cusps"].get<int>();
    if (pres.genus < 0 || pres.cuspCount < 0)
        fail(ErrorKind::ParseError, "genus and cusps must be nonnegative");

    const Json& mats = j["matrices"];
    if (!mats.is_array() || static_cast<int>(mats.size()) != pres.generatorCount())
        fail(ErrorKind::ParseError,
             "expected " + std::to_string(pres.generatorCount()) + " matrices (a1..ag, b1..bg, c1..ck)");

    std::vector<MoebiusElement> images;
    images.reserve(mats.size());
    for (const auto& m : mats) images.push_back(matrixFromJson(m));
    return SurfaceRepresentation(pres, std::move(images));
}

Json representationToJson(const SurfaceRepresentation& rep) {
    Json j;
    j["genus"] = rep.presentation.genus;
    j["cusps"] = rep.presentation.cuspCount;
    Json mats = Json::array();
    Json labels = Json::array();
    for (int i = 0; i < rep.presentation.generatorCount(); ++i) {
        mats.push_back(matrixToJson(rep.images[i]));
        labels.push_back(rep.presentation.generatorLabel(i));
    }
    j["matrices"] = std::move(mats);
    j["labels"] = std::move(labels);
    return j;
}

Json chartToJson(const ChartModel& chart) {
    Json j;
    switch (chart.kind) {
    case ChartKind::Power:
        j["kind"] = "power";
        j["exponent"] = cplxToJson(chart.exponent);
        break;
    case ChartKind::ParabolicLog:
        j["kind"] = "parabolic_log";
        j["n"] = chart.index;
        break;
    case ChartKind::BranchedCover:
        j["kind"] = "branched_cover";
        j["n"] = chart.index;
        break;
    }
    return j;
}

ChartModel chartFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        fail(ErrorKind::ParseError, "chart must be an object with a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "power") {
        if (!j.contains("exponent")) fail(ErrorKind::ParseError, "power chart needs an exponent");
        return ChartModel::power(cplxFromJson(j["exponent"]));
    }
    if (kind == "parabolic_log" || kind == "branched_cover") {
        if (!j.contains("n") || !j["n"].is_number_integer())
            fail(ErrorKind::ParseError, "chart needs an integer n");
        int n = j["n"].get<int>();
        return kind == "parabolic_log" ? ChartModel::parabolicLog(n)
                                       : ChartModel::branchedCover(n);
    }
    fail(ErrorKind::ParseError, "unknown chart kind '" + kind + "'");
}

Json piRationalToJson(const PiRational& r) {
    Json j;
    j["num"] = r.num;
    j["den"] = r.den;
    return j;
}

PiRational piRationalFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
        !j["num"].is_number_integer() || !j["den"].is_number_integer())
        fail(ErrorKind::ParseError, "angle must be {num, den} as a multiple of pi");
    return PiRational(j["num"].get<long long>(), j["den"].get<long long>());
}

Json surgeryStateToJson(const SurgeryState& state) {
    Json j;
    j["genus"] = state.genus;
    Json pts = Json::array();
    for (const auto& p : state.points) {
        Json pj;
        pj["label"] = p.label;
        if (p.kind == MarkedPoint::Kind::Cone)
            pj["cone"] = piRationalToJson(p.angle);
        else
            pj["chart"] = chartToJson(p.chart);
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    j["defect"] = piRationalToJson(state.defect);
    return j;
}

SurgeryState surgeryStateFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("points"))
        fail(ErrorKind::ParseError, "surgery state needs genus and points");
    if (!j["genus"].is_number_integer() || !j["points"].is_array())
        fail(ErrorKind::ParseError, "surgery state: genus must be an integer, points an array");
    std::vector<MarkedPoint> pts;
    for (const auto& pj : j["points"]) {
        if (!pj.is_object() || !pj.contains("label"))
            fail(ErrorKind::ParseError, "surgery point needs a label");
        std::string label = pj["label"].get<std::string>();
        if (pj.contains("cone"))
            pts.push_back(MarkedPoint::cone(label, piRationalFromJson(pj["cone"])));
        else if (pj.contains("chart"))
            pts.push_back(MarkedPoint::fuchsian(label, chartFromJson(pj["chart"])));
        else
            fail(ErrorKind::ParseError, "surgery point needs either a cone angle or a chart");
    }
    return SurgeryState::make(j["genus"].get<int>(), std::move(pts));
}

Json twinSpecToJson(const TwinSpec& twins) {
    Json j;
    j["source"] = twins.source;
    j["alpha"] = piRationalToJson(twins.angleAlpha);
    j["beta"] = piRationalToJson(twins.angleBeta);
    Json eps = Json::array();
    eps.push_back(twins.end1.isRegular() ? Json(nullptr) : Json(*twins.end1.label));
    eps.push_back(twins.end2.isRegular() ? Json(nullptr) : Json(*twins.end2.label));
    j["endpoints"] = std::move(eps);
    return j;
}

TwinSpec twinSpecFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("alpha") || !j.contains("beta") ||
        !j.contains("endpoints"))
        fail(ErrorKind::ParseError, "twins need source, alpha, beta and endpoints");
    const Json& eps = j["endpoints"];
    if (!eps.is_array() || eps.size() != 2)
        fail(ErrorKind::ParseError, "twins: endpoints must be a pair");
    auto endpoint = [](const Json& e) {
        if (e.is_null()) return TwinEndpoint::regular();
        if (!e.is_string()) fail(ErrorKind::ParseError, "twins: endpoint must be a label or null");
        return TwinEndpoint::at(e.get<std::string>());
    };
    TwinSpec t;
    t.source = j["source"].get<std::string>();
    t.angleAlpha = piRationalFromJson(j["alpha"]);
    t.angleBeta = piRationalFromJson(j["beta"]);
    t.end1 = endpoint(eps[0]);
    t.end2 = endpoint(eps[1]);
    return t;
}

std::string fnv1aDigest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json parseJsonText(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON input");
    return j;
}

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseJsonText(buf.str());
}

} // namespace fuchskit
