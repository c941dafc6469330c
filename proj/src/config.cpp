#include "schro/bench.hpp"

#include "schro/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace schro {

namespace {

const std::vector<std::string>& known_keys()
{
    static const std::vector<std::string> keys = {
        "problem", "n",          "M",       "h_levels", "tau_levels", "point", "t",  "extension.mode",
        "extension.alphas",      "quad.a",  "quad.kappa", "quad.R",   "D",     "D0", "r",
        "r0",      "out"};
    return keys;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(trim(cur));
    return out;
}

double parse_real(const std::string& key, const std::string& v)
{
    const auto slash = v.find('/');
    if (slash != std::string::npos)
        return parse_real(key, v.substr(0, slash)) / parse_real(key, v.substr(slash + 1));
    const std::string s = trim(v);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(d))
        throw ConfigError(key + ": not a number: '" + v + "'");
    return d;
}

long parse_int(const std::string& key, const std::string& v)
{
    const std::string s = trim(v);
    long out = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(key + ": not an integer: '" + v + "'");
    return out;
}

std::vector<double> parse_reals(const std::string& key, const std::string& v)
{
    std::vector<double> out;
    for (const auto& part : split(v, ','))
        out.push_back(parse_real(key, part));
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

std::string join_reals(const std::vector<double>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v[i]);
        s += (i ? "," : "") + std::string(buf, res.ptr);
    }
    return s;
}

std::string real_str(double v)
{
    return join_reals({v});
}

Settings problem_defaults(const std::string& problem)
{
    Settings d{{"n", "1"},          {"M", "1,2,3"},    {"t", "1"},   {"quad.a", "1"},
               {"quad.kappa", "0.05"}, {"quad.R", "120"}, {"D", "4"},   {"D0", "4"},
               {"r", "6"},          {"r0", "6"},        {"out", "-"}, {"extension.alphas", "harmonic"}};
    if (problem == "table1") {
        d["h_levels"] = "1/40,1/80,1/160";
        d["tau_levels"] = "1/80,1/160,1/320";
        d["point"] = "0.1,0.4";
        d["extension.mode"] = "hestenes";
    } else if (problem == "table2") {
        d["h_levels"] = "1/20,1/40,1/80";
        d["tau_levels"] = "1/40,1/80,1/160";
        d["point"] = "0.1";
        d["extension.mode"] = "callback";
    } else if (problem == "table3") {
        d["h_levels"] = "1/40,1/80,1/160,1/320";
        d["point"] = "0.2,0.1";
        d["extension.mode"] = "hestenes";
    } else if (problem == "free-gaussian") {
        d["h_levels"] = "1/10,1/20,1/40,1/80";
        d["point"] = "0.2";
        d["extension.mode"] = "callback";
    } else if (problem == "field-slice") {
        d["n"] = "2";
        d["M"] = "3";
        d["h_levels"] = "0.005";
        d["point"] = "-1.25:1.25:51,-1.25:1.25:51";
        d["t"] = "0,0.02,0.04";
        d["extension.mode"] = "callback";
    } else if (problem == "custom") {
        throw ConfigError("problem=custom takes callables and is available through the library API only");
    } else {
        throw ConfigError("unknown problem '" + problem + "'");
    }
    return d;
}

} // namespace

Settings read_settings(std::istream& in)
{
    Settings s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        try {
            apply_setting(s, line);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return s;
}

void apply_setting(Settings& s, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("expected key=value, got '" + assignment + "'");
    const std::string key = trim(assignment.substr(0, eq));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw ConfigError("unknown key '" + key + "'");
    s[key] = trim(assignment.substr(eq + 1));
}

RunConfig resolve_config(const Settings& given)
{
    RunConfig c;
    c.problem = given.count("problem") ? given.at("problem") : "table3";
    Settings s = problem_defaults(c.problem);
    for (const auto& [k, v] : given)
        s[k] = v;
    // Table 1/2 levels pair tau = h/2 unless tau_levels is given.
    if (given.count("h_levels") && !given.count("tau_levels") && (c.problem == "table1" || c.problem == "table2")) {
        std::vector<double> tau;
        for (double h : parse_reals("h_levels", s["h_levels"]))
            tau.push_back(h / 2);
        s["tau_levels"] = join_reals(tau);
    }

    c.n = static_cast<int>(parse_int("n", s["n"]));
    if (c.n < 1 || c.n > 1000)
        throw ConfigError("n must be in [1, 1000]");
    c.M.clear();
    for (const auto& part : split(s["M"], ',')) {
        const long M = parse_int("M", part);
        if (M < 1 || M > 4)
            throw ConfigError("M must be in [1, 4]");
        c.M.push_back(static_cast<int>(M));
    }
    c.h_levels = parse_reals("h_levels", s["h_levels"]);
    for (size_t i = 0; i < c.h_levels.size(); ++i) {
        if (!(c.h_levels[i] > 0))
            throw ConfigError("h_levels must be positive");
        if (i > 0 && !(c.h_levels[i] < c.h_levels[i - 1]))
            throw ConfigError("h_levels must be descending");
    }
    if (s.count("tau_levels")) {
        c.tau_levels = parse_reals("tau_levels", s["tau_levels"]);
        for (double tau : c.tau_levels)
            if (!(tau > 0))
                throw ConfigError("tau_levels must be positive");
    }
    if ((c.problem == "table1" || c.problem == "table2") && c.tau_levels.size() != c.h_levels.size())
        throw ConfigError("tau_levels must pair with h_levels");

    if (c.problem == "field-slice") {
        for (const auto& ax : split(s["point"], ',')) {
            const auto f = split(ax, ':');
            if (f.size() != 3)
                throw ConfigError("point: field-slice axes are lo:hi:count");
            RunConfig::Axis a{parse_real("point", f[0]), parse_real("point", f[1]),
                              static_cast<int>(parse_int("point", f[2]))};
            if (a.count < 1 || !(a.lo <= a.hi))
                throw ConfigError("point: need lo <= hi and count >= 1");
            c.grid.push_back(a);
        }
        if (c.grid.size() != 2 || c.n != 2)
            throw ConfigError("field-slice needs n = 2 and two grid axes");
    } else {
        c.point = parse_reals("point", s["point"]);
        if (!given.count("point") && c.point.size() > static_cast<size_t>(c.n))
            c.point.resize(c.n);
        if (c.point.size() > static_cast<size_t>(c.n))
            throw ConfigError("point has more coordinates than n");
    }
    c.t = parse_reals("t", s["t"]);
    for (double t : c.t)
        if (c.problem != "field-slice" && !(t > 0))
            throw ConfigError("t must be positive");
    if (c.problem != "field-slice" && c.t.size() != 1)
        throw ConfigError("t takes a single value except for field-slice");

    c.extension_mode = s["extension.mode"];
    if (c.extension_mode != "hestenes" && c.extension_mode != "callback" && c.extension_mode != "zero")
        throw ConfigError("extension.mode must be hestenes, callback or zero");
    c.extension_alphas = s["extension.alphas"];
    if (c.extension_alphas != "harmonic" && c.extension_alphas != "dyadic") {
        const auto a = parse_reals("extension.alphas", c.extension_alphas);
        for (int M : c.M)
            if (a.size() != static_cast<size_t>(2 * M + 1))
                throw ConfigError("extension.alphas: need 2M+1 values for every M");
    }

    c.quad.a = parse_real("quad.a", s["quad.a"]);
    c.quad.kappa = parse_real("quad.kappa", s["quad.kappa"]);
    c.quad.R = parse_int("quad.R", s["quad.R"]);
    c.D = parse_real("D", s["D"]);
    c.D0 = parse_real("D0", s["D0"]);
    c.r = parse_real("r", s["r"]);
    c.r0 = parse_real("r0", s["r0"]);
    c.out = s["out"];
    try {
        c.quad.validate();
        GeneratingSpec{c.M.front(), c.D, c.D0}.validate();
        CubatureParams p;
        p.r = c.r;
        p.r0 = c.r0;
        p.D = c.D;
        p.D0 = c.D0;
        p.validate();
        if (c.extension_mode == "hestenes")
            for (int M : c.M)
                c.scheme(2 * M);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return c;
}

std::vector<std::pair<std::string, std::string>> RunConfig::provenance() const
{
    std::string Ms, pt;
    for (size_t i = 0; i < M.size(); ++i)
        Ms += (i ? "," : "") + std::to_string(M[i]);
    if (!grid.empty()) {
        for (size_t i = 0; i < grid.size(); ++i)
            pt += (i ? "," : "") + real_str(grid[i].lo) + ":" + real_str(grid[i].hi) + ":" +
                  std::to_string(grid[i].count);
    } else {
        pt = join_reals(point);
    }
    return {{"problem", problem},
            {"n", std::to_string(n)},
            {"M", Ms},
            {"h_levels", join_reals(h_levels)},
            {"tau_levels", tau_levels.empty() ? "" : join_reals(tau_levels)},
            {"point", pt},
            {"t", join_reals(t)},
            {"extension.mode", extension_mode},
            {"extension.alphas", extension_alphas},
            {"quad.a", real_str(quad.a)},
            {"quad.kappa", real_str(quad.kappa)},
            {"quad.R", std::to_string(quad.R)},
            {"D", real_str(D)},
            {"D0", real_str(D0)},
            {"r", real_str(r)},
            {"r0", real_str(r0)},
            {"out", out}};
}

std::vector<double> RunConfig::eval_point() const
{
    std::vector<double> x = point;
    if (x.empty())
        x.push_back(0.0);
    const double last = x.back();
    x.resize(n, last);
    return x;
}

HestenesScheme RunConfig::scheme(int N) const
{
    if (extension_alphas == "harmonic")
        return HestenesScheme::harmonic(N);
    if (extension_alphas == "dyadic")
        return HestenesScheme::dyadic(N);
    return HestenesScheme::make(parse_reals("extension.alphas", extension_alphas), N);
}

Extension1D::Mode RunConfig::mode() const
{
    if (extension_mode == "hestenes")
        return Extension1D::Mode::hestenes;
    if (extension_mode == "callback")
        return Extension1D::Mode::callback;
    return Extension1D::Mode::zero;
}

} // namespace schro
