#include "ablation/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ablation/errors.hpp"

namespace ablation {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw param_error(key, "not a number: '" + value + "'");
    }
    if (pos != value.size()) throw param_error(key, "trailing characters in '" + value + "'");
    return v;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void apply_override(PhysicalParams& p, const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (key == "r0")
        p.r0 = v;
    else if (key == "r1")
        p.r1 = v;
    else if (key == "kappa")
        p.kappa = v;
    else if (key == "rho")
        p.rho = v;
    else if (key == "c")
        p.c = v;
    else if (key == "sigma")
        p.sigma = v;
    else if (key == "V0")
        p.V0 = v;
    else if (key == "tau")
        p.tau = v;
    else if (key == "T_ambient")
        p.T_ambient = v;
    else
        throw param_error(key, "unknown configuration key");
}

PhysicalParams parse_config(std::istream& in, PhysicalParams base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw param_error("config", "line " + std::to_string(lineno) + ": expected name = value");
        }
        apply_override(base, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }
    return base;
}

PhysicalParams load_config(const std::string& path, PhysicalParams base) {
    std::ifstream in(path);
    if (!in) throw param_error("config", "cannot open '" + path + "'");
    return parse_config(in, base);
}

void dump_config(std::ostream& out, const PhysicalParams& p) {
    out << "# ablation-heat configuration\n";
    out << "r0 = " << format_value(p.r0) << "\n";
    if (p.r1) out << "r1 = " << format_value(*p.r1) << "\n";
    out << "kappa = " << format_value(p.kappa) << "\n";
    out << "rho = " << format_value(p.rho) << "\n";
    out << "c = " << format_value(p.c) << "\n";
    out << "sigma = " << format_value(p.sigma) << "\n";
    out << "V0 = " << format_value(p.V0) << "\n";
    out << "tau = " << format_value(p.tau) << "\n";
    out << "T_ambient = " << format_value(p.T_ambient) << "\n";
}

} // namespace ablation
