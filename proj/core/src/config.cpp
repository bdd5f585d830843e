#include "qtri/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qtri {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(s);
    while (std::getline(in, piece, sep)) out.push_back(trim(piece));
    return out;
}

double parseReal(const std::string& text, const std::string& key) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': malformed number '" + text + "'");
    }
}

}  // namespace

Cplx parseCplx(const std::string& raw, const std::string& key) {
    std::string text = trim(raw);
    if (text.empty()) throw ConfigError("config key '" + key + "': empty value");

    if (text.back() != 'i' && text.back() != 'I') return {parseReal(text, key), 0.0};

    std::string body = text.substr(0, text.size() - 1);
    // Split a+bi / a-bi at the last sign that is not an exponent sign.
    size_t splitAt = std::string::npos;
    for (size_t pos = body.size(); pos-- > 1;) {
        char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            splitAt = pos;
            break;
        }
    }
    auto parseImagPart = [&](std::string part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parseReal(part, key);
    };
    if (splitAt == std::string::npos) return {0.0, parseImagPart(body)};
    return {parseReal(body.substr(0, splitAt), key), parseImagPart(body.substr(splitAt))};
}

int parseHalfInteger(const std::string& raw, const std::string& key) {
    std::string text = trim(raw);
    int twoJ = 0;
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            int whole = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            twoJ = 2 * whole;
        } else {
            size_t usedN = 0, usedD = 0;
            int num = std::stoi(text.substr(0, slash), &usedN);
            int den = std::stoi(text.substr(slash + 1), &usedD);
            if (usedN != slash || usedD != text.size() - slash - 1 || den != 2)
                throw std::invalid_argument("not a half-integer");
            twoJ = num;
        }
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a half-integer like 1/2 or 1, got '" +
                          text + "'");
    }
    if (twoJ < 1 || twoJ > 63)
        throw ConfigError("config key '" + key + "': spin out of range (matrix side is capped)");
    return twoJ;
}

ChainSpec RunConfig::chain() const {
    ChainSpec spec;
    if (explicitSites) {
        spec = *explicitSites;
    } else {
        Cplx v = k * params.qq(1);
        spec.sites.assign(static_cast<size_t>(chainLength), Site{twoJ, v});
    }
    long side = 1;
    for (const Site& site : spec.sites) side *= site.twoJ + 1;
    if (side > 64)
        throw ConfigError("chain too large: matrix side " + std::to_string(side) +
                          " exceeds the cap of 64");
    return spec;
}

void applyConfigEntry(RunConfig& cfg, const std::string& key, const std::string& value, bool& sawS,
                      bool& sawQ) {
    if (key == "s") {
        if (sawQ) throw ConfigError("config keys 's' and 'q' are mutually exclusive");
        sawS = true;
        cfg.params.s = parseCplx(value, key);
    } else if (key == "q") {
        if (sawS) throw ConfigError("config keys 's' and 'q' are mutually exclusive");
        sawQ = true;
        cfg.params.s = std::sqrt(parseCplx(value, key));
    } else if (key == "c0") {
        cfg.params.c0 = parseCplx(value, key);
    } else if (key == "kappa") {
        cfg.params.kappa = parseCplx(value, key);
    } else if (key == "kappa_star") {
        cfg.params.kappaStar = parseCplx(value, key);
    } else if (key == "epsilon_plus") {
        cfg.epsPlus = parseCplx(value, key);
    } else if (key == "epsilon_minus") {
        cfg.epsMinus = parseCplx(value, key);
    } else if (key == "k") {
        cfg.k = parseCplx(value, key);
    } else if (key == "t") {
        cfg.t = parseCplx(value, key);
    } else if (key == "rho_override") {
        cfg.rhoOverride = parseCplx(value, key);
    } else if (key == "j") {
        cfg.twoJ = parseHalfInteger(value, key);
    } else if (key == "N") {
        try {
            size_t used = 0;
            int n = std::stoi(value, &used);
            if (used != value.size() || n < 1 || n > 6)
                throw std::invalid_argument("out of range");
            cfg.chainLength = n;
        } catch (const std::exception&) {
            throw ConfigError("config key 'N': expected an integer in [1, 6], got '" + value + "'");
        }
    } else if (key == "sites") {
        ChainSpec spec;
        for (const std::string& siteText : split(value, ';')) {
            size_t at = siteText.find('@');
            if (at == std::string::npos)
                throw ConfigError("config key 'sites': entry '" + siteText +
                                  "' is not of the form j@v");
            Site site;
            site.twoJ = parseHalfInteger(siteText.substr(0, at), key);
            site.v = parseCplx(siteText.substr(at + 1), key);
            spec.sites.push_back(site);
        }
        if (spec.sites.empty()) throw ConfigError("config key 'sites': no sites given");
        long side = 1;
        for (const Site& site : spec.sites) side *= site.twoJ + 1;
        if (side > 64)
            throw ConfigError("config key 'sites': matrix side " + std::to_string(side) +
                              " exceeds the cap of 64");
        cfg.explicitSites = std::move(spec);
    } else if (key == "tol_id") {
        cfg.params.tolId = parseReal(value, key);
    } else if (key == "tol_eig") {
        cfg.params.tolEig = parseReal(value, key);
    } else if (key == "seed") {
        try {
            size_t used = 0;
            cfg.seed = std::stoull(value, &used);
            if (used != value.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError("config key 'seed': expected an unsigned integer, got '" + value +
                              "'");
        }
    } else if (key == "suite") {
        cfg.suites.clear();
        for (const std::string& name : split(value, ',')) {
            const auto& known = allSuiteNames();
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw ConfigError("config key 'suite': unknown suite '" + name + "'");
            cfg.suites.push_back(name);
        }
    } else if (key == "out") {
        cfg.outPath = value;
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

RunConfig parseConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    RunConfig cfg;
    bool sawS = false, sawQ = false;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": expected key=value, got '" + line + "'");
        applyConfigEntry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), sawS, sawQ);
    }
    return cfg;
}

const std::vector<std::string>& allSuiteNames() {
    static const std::vector<std::string> names = {
        "representation", "tridiagonal", "quadratic", "involution", "reflection",
        "transfer",       "asymptotic",  "spectral",  "orthogonal", "classical",
    };
    return names;
}

}  // namespace qtri
