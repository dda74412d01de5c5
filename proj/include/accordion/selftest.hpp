#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "accordion/polygon.hpp"

namespace accordion {

enum class Outcome { Pass, Fail, ExpectedFail };

struct SelftestReport {
    std::vector<std::string> properties;
    std::vector<Dissection> dissections;
    std::vector<std::vector<Outcome>> outcomes;  // [property][dissection]
    std::vector<std::string> errors;             // first error text per failing cell

    int failures() const;
};

// Every hollow dissection with 3 <= n <= max_n against every invariant the
// library claims. When `out` is given, prints one matrix row per property
// for each n: '.' pass, 'x' fail, 'e' expected failure.
SelftestReport run_selftest(int max_n, std::ostream* out = nullptr);

}  // namespace accordion
