#ifndef APXALG_SCENARIO_HPP
#define APXALG_SCENARIO_HPP

#include <string>

#include "series.hpp"

namespace apxalg {

// A named, validated computation setup: the formal divisor with its marked
// b1 element, ready for the series engine.
struct scenario {
    std::string name;
    std::string description;
    graded_series series;
};

// chen | harmonic | finite:<d>.  Throws usage_error on unknown names.
scenario preset_scenario(const std::string& name);

// Scenario documents are JSON with every number carried as an exact
// rational string ("1/3"); decimals are rejected.  Validation failures
// throw validation_error naming the offending field.
scenario load_scenario_text(const std::string& text);
scenario load_scenario_file(const std::string& path);
std::string save_scenario_text(const scenario& s);

}  // namespace apxalg

#endif
