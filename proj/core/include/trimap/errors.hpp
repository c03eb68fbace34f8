#pragma once

#include <stdexcept>
#include <string>

namespace trimap {

// Every error carries its kind in what() as "<Kind>: <detail>" so front ends
// can surface the category without RTTI gymnastics.
class Error : public std::runtime_error {
public:
    Error(const std::string& kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(kind) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct PoleError : Error {
    explicit PoleError(const std::string& m) : Error("PoleError", m) {}
};
struct BranchCutError : Error {
    explicit BranchCutError(const std::string& m) : Error("BranchCutError", m) {}
};
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& m) : Error("ConvergenceError", m) {}
};
struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& m) : Error("NotHyperbolic", m) {}
};
struct OrderTooSmall : Error {
    explicit OrderTooSmall(const std::string& m) : Error("OrderTooSmall", m) {}
};
struct DegenerateParams : Error {
    explicit DegenerateParams(const std::string& m) : Error("DegenerateParams", m) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& m) : Error("ZeroDenominator", m) {}
};
struct OutsideFundamentalDomain : Error {
    explicit OutsideFundamentalDomain(const std::string& m) : Error("OutsideFundamentalDomain", m) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& m) : Error("NoConvergence", m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error("IoError", m) {}
};

}  // namespace trimap
