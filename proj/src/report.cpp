#include "turanlab/report.hpp"

#include <json.hpp>

namespace turanlab {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string params_string(const SuiteCell& cell) {
    std::vector<std::string> parts;
    for (const auto& [key, value] : cell.params) parts.push_back(key + "=" + value);
    return join(parts, ",");
}

}  // namespace

std::string to_json(const SuiteReport& report) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["suite"] = report.suite;
    Json cells = Json::array();
    for (const auto& cell : report.cells) {
        Json params = Json::object();
        for (const auto& [key, value] : cell.params) params[key] = value;
        Json c;
        c["params"] = params;
        c["expected"] = cell.expected;
        c["actual"] = cell.actual;
        c["status"] = to_string(cell.status);
        c["witnesses"] = cell.witnesses;
        if (!cell.note.empty()) c["note"] = cell.note;
        cells.push_back(c);
    }
    doc["cells"] = cells;
    doc["summary"] = {{"pass", report.count(CellStatus::pass)},
                      {"fail", report.count(CellStatus::fail)},
                      {"diagnostic", report.count(CellStatus::diagnostic)}};
    return doc.dump(2) + "\n";
}

std::string to_json(const ExtremalRecord& record) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["n"] = record.n;
    doc["target"] = record.target.name();
    doc["forbidden"] = record.forbidden.name();
    doc["connected_only"] = record.connected_only;
    if (record.max_count) {
        doc["max_count"] = *record.max_count;
    } else {
        doc["max_count"] = nullptr;
    }
    doc["witnesses"] = record.witnesses;
    doc["graphs_scanned"] = record.graphs_scanned;
    doc["mode"] = to_string(record.mode);
    return doc.dump(2) + "\n";
}

std::string to_tsv(const SuiteReport& report) {
    std::string out = "#suite\tparams\texpected\tactual\tstatus\twitnesses\tnote\n";
    for (const auto& cell : report.cells) {
        out += report.suite + "\t" + params_string(cell) + "\t" + cell.expected + "\t" + cell.actual + "\t" +
               to_string(cell.status) + "\t" + join(cell.witnesses, ",") + "\t" + cell.note + "\n";
    }
    return out;
}

std::string to_tsv(const ExtremalRecord& record) {
    std::string out;
    out += "n\t" + std::to_string(record.n) + "\n";
    out += "target\t" + record.target.name() + "\n";
    out += "forbidden\t" + record.forbidden.name() + "\n";
    out += std::string("connected_only\t") + (record.connected_only ? "true" : "false") + "\n";
    out += "max_count\t" + (record.max_count ? std::to_string(*record.max_count) : std::string("no admissible graph")) + "\n";
    out += "witnesses\t" + join(record.witnesses, ",") + "\n";
    out += "graphs_scanned\t" + std::to_string(record.graphs_scanned) + "\n";
    out += "mode\t" + to_string(record.mode) + "\n";
    return out;
}

}  // namespace turanlab
