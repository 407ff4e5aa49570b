#include "wpd/polytope_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wpd/errors.hpp"

namespace wpd {

using json = nlohmann::json;

Polytope hypercube(std::size_t n, const Rational& side) {
    if (n == 0 || side.sign() <= 0)
        throw InputError("hypercube needs n >= 1 and a positive side");
    std::vector<HalfSpace> facets;
    for (std::size_t i = 0; i < n; ++i) {
        QVector u(n);
        u[i] = 1;
        facets.push_back({u, 0});
        facets.push_back({-u, -side});
    }
    return Polytope(std::move(facets));
}

Polytope dilated_simplex(std::size_t n, const Rational& d) {
    if (n == 0 || d.sign() <= 0)
        throw InputError("simplex needs n >= 1 and a positive dilation");
    std::vector<HalfSpace> facets;
    for (std::size_t i = 0; i < n; ++i) {
        QVector u(n);
        u[i] = 1;
        facets.push_back({u, 0});
    }
    facets.push_back({QVector(n, Rational(-1)), -d});
    return Polytope(std::move(facets));
}

Polytope interval(const Rational& lo, const Rational& hi) {
    if (!(lo < hi))
        throw InputError("interval needs lo < hi");
    return Polytope({{{1}, lo}, {{-1}, -hi}});
}

Polytope trapezoid() {
    return Polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}, {{-1, -1}, -2}});
}

Polytope prism() {
    return Polytope({{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, -1}, {{0, 0, 1}, 0}, {{0, 0, -1}, -1}});
}

Polytope skew_triangle() {
    return Polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -2}, -2}});
}

std::vector<HalfSpace> octahedron_facets() {
    std::vector<HalfSpace> facets;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                facets.push_back({{a, b, c}, -1});
    return facets;
}

namespace {

std::vector<Rational> parse_params(std::string_view s, std::string_view name) {
    std::vector<Rational> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(Rational::parse(piece));
        } catch (const InputError& e) {
            throw InputError("builtin '" + std::string(name) + "': " + e.what());
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::size_t as_dimension(const Rational& r, std::string_view name) {
    if (!r.is_integer() || r.sign() <= 0 || r > Rational(8))
        throw InputError("builtin '" + std::string(name) + "': dimension must be an integer in 1..8, got " + r.str());
    return r.num().get_ui();
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"interval:lo,hi | interval:d", "cube:n[,side]", "simplex:n[,d]", "trapezoid", "prism", "skew-triangle",
            "octahedron"};
}

Polytope builtin_polytope(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    auto params = parse_params(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1), name);
    auto expect = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw InputError("builtin '" + std::string(name) + "': wrong number of parameters");
    };
    if (name == "interval") {
        expect(1, 2);
        return params.size() == 1 ? interval(0, params[0]) : interval(params[0], params[1]);
    }
    if (name == "cube") {
        expect(1, 2);
        return hypercube(as_dimension(params[0], name), params.size() > 1 ? params[1] : Rational(1));
    }
    if (name == "simplex") {
        expect(1, 2);
        return dilated_simplex(as_dimension(params[0], name), params.size() > 1 ? params[1] : Rational(1));
    }
    if (name == "trapezoid") {
        expect(0, 0);
        return trapezoid();
    }
    if (name == "prism") {
        expect(0, 0);
        return prism();
    }
    if (name == "skew-triangle") {
        expect(0, 0);
        return skew_triangle();
    }
    if (name == "octahedron") {
        expect(0, 0);
        return Polytope(octahedron_facets());
    }
    throw InputError("unknown builtin polytope '" + std::string(name) + "'");
}

namespace {

Rational number_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_float())
        throw InputError(where + ": float literal " + j.dump() + " not allowed; use an integer or \"p/q\"");
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected a number, got " + std::string(j.type_name()));
}

} // namespace

std::vector<HalfSpace> parse_facets(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed polytope file: ") + e.what());
    }
    if (!doc.is_object())
        throw InputError("polytope file: top level must be an object");
    if (!doc.contains("dim"))
        throw InputError("polytope file: missing field 'dim'");
    if (!doc.contains("facets"))
        throw InputError("polytope file: missing field 'facets'");
    const json& dim = doc["dim"];
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
        throw InputError("dim: expected a positive integer, got " + dim.dump());
    const auto n = static_cast<std::size_t>(dim.get<std::int64_t>());
    const json& rows = doc["facets"];
    if (!rows.is_array() || rows.empty())
        throw InputError("facets: expected a nonempty array");
    std::vector<HalfSpace> facets;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "facets[" + std::to_string(i) + "]";
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n + 1)
            throw InputError(where + ": expected an array of " + std::to_string(n + 1) + " numbers (normal, lambda)");
        HalfSpace h;
        for (std::size_t k = 0; k < n; ++k)
            h.normal.push_back(number_from_json(row[k], where + "[" + std::to_string(k) + "]"));
        h.offset = number_from_json(row[n], where + "[" + std::to_string(n) + "]");
        facets.push_back(std::move(h));
    }
    return facets;
}

Polytope polytope_from_text(std::string_view text) { return Polytope(parse_facets(text)); }

Polytope polytope_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open polytope file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return polytope_from_text(buf.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string facets_to_text(const std::vector<HalfSpace>& facets) {
    auto lit = [](const Rational& r) { return r.is_integer() ? r.str() : "\"" + r.str() + "\""; };
    std::ostringstream os;
    os << "{\"dim\": " << (facets.empty() ? 0 : facets.front().normal.size()) << ", \"facets\": [";
    for (std::size_t i = 0; i < facets.size(); ++i) {
        os << (i ? ", " : "") << '[';
        for (const auto& x : facets[i].normal)
            os << lit(x) << ", ";
        os << lit(facets[i].offset) << ']';
    }
    os << "]}";
    return os.str();
}

} // namespace wpd
