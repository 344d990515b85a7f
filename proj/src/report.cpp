#include "floorsums/report.hpp"

#include <json.hpp>

#include <sstream>

namespace floorsums {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Splits one CSV record, honoring quoted fields.
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string residue_text(const std::optional<Integer>& residue) {
    return residue ? to_string(*residue) : std::string();
}

}  // namespace

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "theorem,p,r,modulus,lhs_residue,rhs_residue,pass,note\n";
    for (const Verdict& v : report.verdicts) {
        out << theorem_name(v.theorem) << ',' << to_string(v.p) << ',';
        if (v.r) out << *v.r;
        out << ',' << to_string(v.modulus) << ',' << residue_text(v.lhs_residue) << ','
            << residue_text(v.rhs_residue) << ',' << (v.pass ? "true" : "false") << ','
            << csv_escape(v.note) << '\n';
    }
    return out.str();
}

std::vector<Verdict> parse_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<Verdict> verdicts;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        const std::vector<std::string> f = csv_split(line);
        if (f.size() != 8) throw std::invalid_argument("malformed verdict row: " + line);
        Verdict v;
        const auto id = theorem_from_name(f[0]);
        if (!id) throw std::invalid_argument("unknown theorem name: " + f[0]);
        v.theorem = *id;
        v.p = parse_integer(f[1]);
        if (!f[2].empty()) v.r = std::stol(f[2]);
        v.modulus = parse_integer(f[3]);
        if (!f[4].empty()) v.lhs_residue = parse_integer(f[4]);
        if (!f[5].empty()) v.rhs_residue = parse_integer(f[5]);
        if (f[6] != "true" && f[6] != "false")
            throw std::invalid_argument("bad pass field: " + f[6]);
        v.pass = f[6] == "true";
        v.note = f[7];
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

std::string to_json(const SweepReport& report) {
    nlohmann::ordered_json doc;
    doc["metadata"] = {
        {"tool", "floorsums"},
        {"version", report.tool_version},
        {"pmin", to_string(report.pmin)},
        {"pmax", to_string(report.pmax)},
        {"r_policy", report.r_policy == RPolicy::all_valid_r ? "all" : "r1"},
        {"timestamp", report.timestamp},
    };
    auto& names = doc["metadata"]["theorems"] = nlohmann::ordered_json::array();
    for (TheoremId id : report.theorems) names.push_back(std::string(theorem_name(id)));

    auto& rows = doc["verdicts"] = nlohmann::ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        nlohmann::ordered_json row;
        row["theorem"] = std::string(theorem_name(v.theorem));
        row["p"] = to_string(v.p);
        if (v.r)
            row["r"] = *v.r;
        else
            row["r"] = nullptr;
        row["modulus"] = to_string(v.modulus);
        row["lhs_residue"] = v.lhs_residue ? nlohmann::ordered_json(residue_text(v.lhs_residue))
                                           : nlohmann::ordered_json(nullptr);
        row["rhs_residue"] = v.rhs_residue ? nlohmann::ordered_json(residue_text(v.rhs_residue))
                                           : nlohmann::ordered_json(nullptr);
        row["pass"] = v.pass;
        row["note"] = v.note;
        rows.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string verdict_line(const Verdict& v) {
    std::ostringstream out;
    out << theorem_name(v.theorem) << " p=" << to_string(v.p);
    if (v.r) out << " r=" << *v.r;
    out << " m=" << to_string(v.modulus);
    out << " lhs=" << (v.lhs_residue ? to_string(*v.lhs_residue) : "undef");
    out << " rhs=" << (v.rhs_residue ? to_string(*v.rhs_residue) : "undef");
    out << (v.pass ? " PASS" : " FAIL");
    if (!v.note.empty()) out << " # " << v.note;
    return out.str();
}

}  // namespace floorsums
