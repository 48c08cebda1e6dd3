#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace soergel {

struct CaseResult {
    std::string suite;
    std::string id;
    std::string status;  // pass | fail | error
    long runtime_ms = 0;
    std::string details;
};

class Report {
public:
    // Runs fn, timing it; ok=true => pass, false => fail; exceptions => error.
    void run_case(const std::string& suite, const std::string& id,
                  const std::function<bool(std::string& details)>& fn);
    void add(CaseResult r) { results_.push_back(std::move(r)); }

    bool all_passed() const;
    // Sorted by case id; runtime_ms zeroed when with_timing is false.
    std::string to_json(bool with_timing = true) const;
    std::string to_text(bool with_timing = true) const;
    const std::vector<CaseResult>& results() const { return results_; }

private:
    std::vector<CaseResult> results_;
};

}  // namespace soergel
