#include "hecke/check_report.hpp"

namespace hecke {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "unknown";
}

void CheckReport::fail(FailureWitness w) {
    status = Status::Fail;
    if (!first_failure) first_failure = std::move(w);
}

bool CheckReport::expect_equal(const PolyMatrix& lhs, const PolyMatrix& rhs, const std::string& kind,
                               const std::string& relation) {
    const auto diff = first_difference(lhs, rhs);
    if (!diff) return true;
    FailureWitness w = witness(kind, relation);
    w.row = diff->row;
    w.col = diff->col;
    w.lhs = diff->lhs.to_string();
    w.rhs = diff->rhs.to_string();
    fail(std::move(w));
    return false;
}

FailureWitness witness(const std::string& kind, std::string detail) {
    FailureWitness w;
    w.kind = kind;
    w.detail = std::move(detail);
    return w;
}

}  // namespace hecke
