#pragma once

#include "resemblance/incompressible.hpp"

#include <cstdint>

namespace resemblance {

struct SuiteReport {
    std::string name;
    size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

// least upper bound of a strictly increasing sequence read off its tail
Ordinal sup_of_tail(const std::vector<Ordinal>& seq);
// fundamental sequence term lambda[n] for a limit lambda
Ordinal fundamental(const Ordinal& lambda, unsigned n);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const Config& cfg, std::uint64_t seed, const Budget& budget);

} // namespace resemblance
