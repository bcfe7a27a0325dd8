#pragma once

#include <stdexcept>
#include <string>

namespace agcvg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed scenario/plan document (bad syntax, unknown grid character, ...).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input violating a model invariant; the message names the
// offending field and, where applicable, the cell index.
struct ValidationError : Error {
    using Error::Error;
};

// Planning cannot satisfy the energy constraint. Carries the computed budget
// so callers can report how far off the endurance is.
struct InfeasibleError : Error {
    InfeasibleError(const std::string& msg, double budget_m)
        : Error(msg), budget_m(budget_m) {}
    double budget_m;
};

// Raised by the simulator on mid-flight energy exhaustion.
struct SimulationError : Error {
    SimulationError(const std::string& msg, double time_s, double x_m, double y_m)
        : Error(msg), time_s(time_s), x_m(x_m), y_m(y_m) {}
    double time_s;
    double x_m;
    double y_m;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace agcvg
