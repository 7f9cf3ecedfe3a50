#pragma once

#include <stdexcept>
#include <string>

namespace slocal {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// File parsing failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A node queried beyond its declared locality.
class LocalityViolation : public Error {
public:
    LocalityViolation(int node, int requested, int declared)
        : Error("node " + std::to_string(node) + " queried radius " +
                std::to_string(requested) + " beyond declared locality " +
                std::to_string(declared)),
          node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

// A node wrote into a memory beyond its declared write radius.
class WriteViolation : public Error {
public:
    WriteViolation(int node, int target, int write_radius)
        : Error("node " + std::to_string(node) + " wrote to node " +
                std::to_string(target) + " beyond write radius " +
                std::to_string(write_radius)),
          node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

// An exactly-solved ball exceeded the configured node cap.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// unique_subset_search / balanced_coloring_search could not meet the target.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// An oracle handed to a reduction returned an output that fails verification.
class OracleFailure : public Error {
public:
    explicit OracleFailure(const std::string& what) : Error(what) {}
};

// An internal guarantee that should hold by construction was violated.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

// Same-phase clusters interfered during a compiled simulation.
class SeparationViolation : public Error {
public:
    explicit SeparationViolation(const std::string& what) : Error(what) {}
};

// A dependency closure escaped the ball justified by the ordering diameter.
class CompilationSoundnessError : public Error {
public:
    explicit CompilationSoundnessError(const std::string& what) : Error(what) {}
};

}  // namespace slocal
