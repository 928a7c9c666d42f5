#pragma once

#include <string>
#include <vector>

#include "latwidth/bounds.hpp"
#include "latwidth/classify.hpp"

namespace latwidth::cli {

enum class Outcome { Pass, Fail, NotApplicable };

struct CheckLine {
    Coord d = 0;
    std::string property;
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

struct VerifyResult {
    std::vector<CheckLine> lines;
    std::vector<BoundReport> reports;
};

// Every bound and cross-lemma property for one width, over an already
// enumerated class list.
VerifyResult verify_width(Coord d, const std::vector<MinimalClass>& classes);

std::string format_line(const CheckLine& line);

}  // namespace latwidth::cli
