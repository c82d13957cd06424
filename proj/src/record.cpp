#include "vilenkin/record.hpp"

#include <stdexcept>

namespace vilenkin {

double ExperimentRecord::value(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw std::out_of_range("record has no statistic '" + name + "'");
}

Index ExperimentRecord::key(const std::string& name) const {
    for (const auto& [k, v] : keys)
        if (k == name) return v;
    throw std::out_of_range("record has no key '" + name + "'");
}

}  // namespace vilenkin
