#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

// One row of a sweep: ordered integer keys, then named statistics.
struct ExperimentRecord {
    std::string experiment;
    std::vector<std::pair<std::string, Index>> keys;
    std::vector<std::pair<std::string, double>> values;

    double value(const std::string& name) const;
    Index key(const std::string& name) const;
};

}  // namespace vilenkin
