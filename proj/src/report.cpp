#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "error.hpp"
#include "oracle.hpp"

namespace apxalg {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* display_note =
    "fields named *_display are decimal approximations; rational strings are authoritative";

std::string display_decimal(const rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", r.approx());
    return buf;
}

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

// floor-divisor coefficients as a tuple; sparse supports keep their indices
std::string entries_str(const finite_divisor& d) {
    const auto& entries = d.entries();
    bool contiguous = true;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].idx != static_cast<std::int64_t>(i)) {
            contiguous = false;
            break;
        }
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ", ";
        if (!contiguous) out += std::to_string(entries[i].idx) + ":";
        out += std::to_string(entries[i].coeff);
    }
    out += ")";
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

bool has_display_column(const report_document& doc) {
    return std::any_of(doc.columns.begin(), doc.columns.end(), [](const std::string& c) {
        return c.size() > 8 && c.rfind("_display") == c.size() - 8;
    });
}

ordered_json to_json_document(const report_document& doc) {
    ordered_json out;
    out["command"] = doc.command;
    out["scenario"] = doc.scenario_name;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : doc.parameters) params[k] = v;
    out["parameters"] = std::move(params);
    out["columns"] = doc.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : doc.rows) {
        ordered_json r = ordered_json::object();
        for (std::size_t i = 0; i < doc.columns.size(); ++i) r[doc.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    if (!doc.summary.empty()) {
        ordered_json summary = ordered_json::object();
        for (const auto& [k, v] : doc.summary) summary[k] = v;
        out["summary"] = std::move(summary);
    }
    if (has_display_column(doc)) out["note"] = display_note;
    return out;
}

std::string render_table(const report_document& doc) {
    std::string out = "command: " + doc.command + "   scenario: " + doc.scenario_name + "\n";
    for (const auto& [k, v] : doc.parameters) out += "  " + k + " = " + v + "\n";
    if (!doc.rows.empty() || !doc.columns.empty()) {
        std::vector<std::size_t> width(doc.columns.size());
        for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
        for (const auto& row : doc.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        const auto emit_row = [&](const std::vector<std::string>& cells) {
            std::string line = " ";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                line += " " + cells[i] + std::string(width[i] - cells[i].size(), ' ');
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
        };
        emit_row(doc.columns);
        std::string rule = "  ";
        for (std::size_t i = 0; i < width.size(); ++i)
            rule += std::string(width[i], '-') + (i + 1 < width.size() ? " " : "");
        out += rule + "\n";
        for (const auto& row : doc.rows) emit_row(row);
    }
    for (const auto& [k, v] : doc.summary) out += k + ": " + v + "\n";
    if (has_display_column(doc)) out += "(" + std::string(display_note) + ")\n";
    return out;
}

std::string render_csv(const report_document& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
        out += (i > 0 ? "," : "") + csv_cell(doc.columns[i]);
    out += "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i > 0 ? "," : "") + csv_cell(row[i]);
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render(const report_document& doc, render_format fmt) {
    switch (fmt) {
        case render_format::table:
            return render_table(doc);
        case render_format::json:
            return to_json_document(doc).dump(2) + "\n";
        case render_format::csv:
            return render_csv(doc);
    }
    throw internal_error("unreachable render format");
}

report_document cmd_seq(const scenario& s, std::uint64_t n_max) {
    if (n_max < 1) throw usage_error("seq needs n >= 1");
    report_document doc;
    doc.command = "seq";
    doc.scenario_name = s.name;
    doc.parameters = {{"n", u64_str(n_max)}};
    doc.columns = {"n", "entries", "degree"};
    const formal_divisor& d = s.series.divisor();
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const finite_divisor fl = d.floor(n);
        doc.rows.push_back({u64_str(n), entries_str(fl), std::to_string(fl.degree())});
    }
    return doc;
}

report_document cmd_dim(const scenario& s, std::uint64_t n_max) {
    if (n_max < 1) throw usage_error("dim needs n >= 1");
    report_document doc;
    doc.command = "dim";
    doc.scenario_name = s.name;
    doc.parameters = {{"n", u64_str(n_max)}};
    doc.columns = {"n", "dim"};
    for (std::uint64_t n = 1; n <= n_max; ++n)
        doc.rows.push_back({u64_str(n), u64_str(s.series.dim_piece(n))});
    return doc;
}

report_document cmd_certify(const scenario& s, const rational& epsilon,
                            const std::vector<std::uint64_t>& p_list, std::uint64_t n_max,
                            unsigned threads) {
    const certificate_report rep =
        s.series.certify_approximable(epsilon, p_list, n_max, threads);
    report_document doc;
    doc.command = "certify";
    doc.scenario_name = s.name;
    std::string plist_str;
    for (const auto& e : rep.entries)
        plist_str += (plist_str.empty() ? "" : ",") + u64_str(e.p);
    doc.parameters = {{"epsilon", rep.epsilon.str()},
                      {"p_list", plist_str},
                      {"n_max", u64_str(rep.n_max)}};
    doc.columns = {"p", "min_ratio", "min_ratio_display", "at_n", "deficiency"};
    for (const auto& e : rep.entries) {
        doc.rows.push_back({u64_str(e.p), e.min_ratio.str(), display_decimal(e.min_ratio),
                            u64_str(e.min_ratio_n),
                            e.deficiency ? std::to_string(*e.deficiency) : "-"});
    }
    if (rep.certified) {
        doc.summary.emplace_back("verdict", "certified-up-to-samples");
        doc.summary.emplace_back("certified_from_p", u64_str(*rep.certified_from_p));
    } else {
        doc.summary.emplace_back("verdict", "refuted-at(p=" + u64_str(rep.refuted_at->first) +
                                                ", n=" + u64_str(rep.refuted_at->second) + ")");
    }
    doc.summary.emplace_back("threshold", (rational(1) - rep.epsilon).str());
    doc.summary.emplace_back(
        "sampling", "minima over 1 <= n <= " + u64_str(rep.n_max) + "; not a proof");
    return doc;
}

report_document cmd_support(const scenario& s, std::uint64_t n_max) {
    report_document doc;
    doc.command = "support";
    doc.scenario_name = s.name;
    doc.parameters = {{"n_max", u64_str(n_max)}};
    doc.columns = {"n", "count"};
    for (const auto& [n, count] : s.series.support_growth(n_max))
        doc.rows.push_back({u64_str(n), u64_str(count)});
    return doc;
}

report_document cmd_volume(const scenario& s, std::uint64_t n_max, unsigned threads) {
    if (n_max < 1) throw usage_error("volume needs n_max >= 1");
    report_document doc;
    doc.command = "volume";
    doc.scenario_name = s.name;
    doc.parameters = {{"n_max", u64_str(n_max)}};
    doc.columns = {"n", "dim", "volume", "volume_display"};
    std::vector<std::uint64_t> samples(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) samples[n - 1] = n;
    for (const auto& [n, v] : s.series.volume_sequence(samples, threads))
        doc.rows.push_back(
            {u64_str(n), u64_str(s.series.dim_piece(n)), v.str(), display_decimal(v)});
    return doc;
}

report_document cmd_oracle_check(const scenario& s, std::uint64_t cap, bool* mismatch) {
    if (cap < 1) throw usage_error("oracle check needs cap >= 1");
    report_document doc;
    doc.command = "oracle-check";
    doc.scenario_name = s.name;
    doc.parameters = {{"cap", u64_str(cap)}};
    doc.columns = {"check", "p", "n", "closed_form", "oracle", "match"};
    bool all_match = true;
    const formal_divisor& d = s.series.divisor();
    const auto push = [&](const char* check, const std::string& p, std::uint64_t n,
                          std::uint64_t closed, std::uint64_t oracle) {
        const bool match = closed == oracle;
        all_match = all_match && match;
        doc.rows.push_back({check, p, u64_str(n), u64_str(closed), u64_str(oracle),
                            match ? "yes" : "NO"});
    };
    for (std::uint64_t n = 0; n <= cap; ++n)
        push("dim", "-", n, s.series.dim_piece(n), oracle_dim(d, n, cap));
    for (std::uint64_t p = 1; p <= 5; ++p)
        for (std::uint64_t n = 1; n <= 4; ++n) {
            if (p * n > cap) continue;
            push("image", u64_str(p), n, s.series.image_dim(p, n),
                 oracle_image_dim(d, p, n, cap));
        }
    doc.summary.emplace_back("result", all_match ? "all checks match" : "MISMATCH");
    if (mismatch) *mismatch = !all_match;
    return doc;
}

std::string cmd_report(const scenario& s, unsigned threads, bool* mismatch) {
    ordered_json bundle;
    bundle["command"] = "report";
    bundle["scenario"] = s.name;
    bundle["description"] = s.description;
    ordered_json sections = ordered_json::array();
    sections.push_back(to_json_document(cmd_seq(s, 12)));
    sections.push_back(to_json_document(cmd_dim(s, 12)));
    sections.push_back(to_json_document(
        cmd_certify(s, rational(1, 16), {2, 4, 8, 16}, 200, threads)));
    sections.push_back(to_json_document(cmd_support(s, 256)));
    sections.push_back(to_json_document(cmd_volume(s, 32, threads)));
    bool bad = false;
    sections.push_back(to_json_document(cmd_oracle_check(s, 12, &bad)));
    bundle["sections"] = std::move(sections);
    bundle["oracle_mismatch"] = bad;
    if (mismatch) *mismatch = bad;
    return bundle.dump(2) + "\n";
}

}  // namespace apxalg
