#include "qtri/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace qtri {

int Report::passedCount() const {
    int n = 0;
    for (const CheckRecord& c : checks)
        if (c.pass) ++n;
    return n;
}

int Report::failedCount() const { return static_cast<int>(checks.size()) - passedCount(); }

std::string formatDouble(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string Report::toJson() const {
    using json = nlohmann::ordered_json;

    std::vector<const CheckRecord*> ordered;
    ordered.reserve(checks.size());
    for (const CheckRecord& c : checks) ordered.push_back(&c);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const CheckRecord* a, const CheckRecord* b) { return a->name < b->name; });

    json doc;
    doc["schema_version"] = schemaVersion;
    doc["command"] = command;
    doc["seed"] = seed;
    doc["passed"] = passedCount();
    doc["failed"] = failedCount();
    doc["wall_time_seconds"] = formatDouble(wallTimeSeconds);

    json arr = json::array();
    for (const CheckRecord* c : ordered) {
        json rec;
        rec["name"] = c->name;
        rec["relation"] = c->relation;
        rec["residual"] = formatDouble(c->residual);
        rec["threshold"] = formatDouble(c->threshold);
        rec["pass"] = c->pass;
        if (!c->inputs.empty()) rec["inputs"] = c->inputs;    // std::map: already key-sorted
        if (!c->fitted.empty()) rec["fitted"] = c->fitted;
        if (!c->note.empty()) rec["note"] = c->note;
        arr.push_back(std::move(rec));
    }
    doc["checks"] = std::move(arr);
    return doc.dump(2) + "\n";
}

CheckRecord makeCheck(std::string name, std::string relation, double residual, double threshold) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.relation = std::move(relation);
    rec.residual = residual;
    rec.threshold = threshold;
    rec.pass = residual <= threshold;
    return rec;
}

}  // namespace qtri
