#include "spdspds/error.hpp"

#include <sstream>

namespace spdspds {

namespace {

std::string bounds_message(const std::string& variable, double lower, double upper) {
    std::ostringstream os;
    os << "variable '" << variable << "' has lower bound " << lower << " above upper bound "
       << upper;
    return os.str();
}

std::string pivot_message(std::size_t row, std::size_t col, double value) {
    std::ostringstream os;
    os << "pivot element at (" << row << ", " << col << ") is numerically zero (" << value << ")";
    return os.str();
}

}  // namespace

InfeasibleBoundsError::InfeasibleBoundsError(std::string variable, double lower, double upper)
    : Error(bounds_message(variable, lower, upper)), variable_(std::move(variable)) {}

ZeroPivotError::ZeroPivotError(std::size_t row, std::size_t col, double value)
    : Error(pivot_message(row, col, value)) {}

MpsError::MpsError(Kind kind, std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

const char* to_string(MpsError::Kind kind) noexcept {
    switch (kind) {
        case MpsError::Kind::unknown_section: return "unknown section";
        case MpsError::Kind::duplicate_row: return "duplicate row";
        case MpsError::Kind::undeclared_reference: return "undeclared reference";
        case MpsError::Kind::malformed_number: return "malformed number";
        case MpsError::Kind::malformed_record: return "malformed record";
        case MpsError::Kind::io: return "i/o error";
    }
    return "mps error";
}

}  // namespace spdspds
