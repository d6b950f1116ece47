#ifndef APXALG_REPORT_HPP
#define APXALG_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "scenario.hpp"

namespace apxalg {

enum class render_format { table, json, csv };

// One command's result, already stringified: exact rationals as "p/q",
// decimal approximations only in columns named *_display.  Rendering never
// recomputes anything, so every format carries identical exact data.
struct report_document {
    std::string command;
    std::string scenario_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

std::string render(const report_document& doc, render_format fmt);

report_document cmd_seq(const scenario& s, std::uint64_t n_max);
report_document cmd_dim(const scenario& s, std::uint64_t n_max);
report_document cmd_certify(const scenario& s, const rational& epsilon,
                            const std::vector<std::uint64_t>& p_list, std::uint64_t n_max,
                            unsigned threads);
report_document cmd_support(const scenario& s, std::uint64_t n_max);
report_document cmd_volume(const scenario& s, std::uint64_t n_max, unsigned threads);
// sets *mismatch when any oracle value disagrees with its closed form
report_document cmd_oracle_check(const scenario& s, std::uint64_t cap, bool* mismatch);

// every command with stock parameters, bundled as one JSON document;
// sets *mismatch when the bundled oracle check disagrees anywhere
std::string cmd_report(const scenario& s, unsigned threads, bool* mismatch = nullptr);

}  // namespace apxalg

#endif
