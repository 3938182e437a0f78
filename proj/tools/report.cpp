#include "report.hpp"

#include <fstream>
#include <limits>

namespace rauzy::cli {

bool Report::ok() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

json Report::to_json() const {
    json checks_json = json::array();
    for (const Check& c : checks) checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"command", command}, {"params", params}, {"inputs", inputs}, {"outputs", outputs}, {"checks", checks_json}};
}

json big(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

json ring_json(const RingElem& x) { return {{"n", big(x.n)}, {"p", big(x.p)}, {"q", big(x.q)}, {"label", to_string(x)}}; }

json field_json(const FieldElem& x, const RootData& rd) {
    auto s = [](const Rational& r) { return r.str(); };
    return {{"n", s(x.n)}, {"p", s(x.p)}, {"q", s(x.q)}, {"label", to_string(x)}, {"value", complex_json(embed(x, rd.alpha))}};
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json point_json(Point2 p, RootCase kind) {
    if (kind == RootCase::Complex) return {{"re", p.x}, {"im", p.y}};
    return {{"x", p.x}, {"y", p.y}};
}

json params_json(const Params& p) { return {{"a", p.a}, {"b", p.b}}; }

void write_file(const std::filesystem::path& path, const std::string& data) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rauzy::cli
