#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hecke/poly_matrix.hpp"

namespace hecke {

enum class Status { Pass, Fail, Info };

std::string to_string(Status s);

// Where a check first went wrong. kind names the failure class
// (RelationFailure, MurphyMismatch, ConditionFailure, ...).
struct FailureWitness {
    std::string kind;
    std::string detail;
    std::optional<int> row;
    std::optional<int> col;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;
    Status status = Status::Pass;
    std::optional<std::string> ratio;
    std::optional<std::pair<int, int>> degrees;
    std::optional<FailureWitness> first_failure;
    std::map<std::string, std::string> details;
    double elapsed_ms = 0.0;

    [[nodiscard]] bool passed() const { return status == Status::Pass; }
    [[nodiscard]] bool failed() const { return status == Status::Fail; }

    // Marks the report failed; the first recorded witness wins.
    void fail(FailureWitness w);
    // Records lhs == rhs; on mismatch fails with the differing entry. Returns
    // whether the identity held.
    bool expect_equal(const PolyMatrix& lhs, const PolyMatrix& rhs, const std::string& kind,
                      const std::string& relation);
};

FailureWitness witness(const std::string& kind, std::string detail);

// Accumulates wall time into a report on destruction.
class ScopedTimer {
public:
    explicit ScopedTimer(CheckReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ScopedTimer(const ScopedTimer&) = delete;
    ScopedTimer& operator=(const ScopedTimer&) = delete;
    ~ScopedTimer() {
        const auto dt = std::chrono::steady_clock::now() - start_;
        report_.elapsed_ms += std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    CheckReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace hecke
