#include "soergel/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace soergel {

void Report::run_case(const std::string& suite, const std::string& id,
                      const std::function<bool(std::string&)>& fn) {
    CaseResult r;
    r.suite = suite;
    r.id = id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string details;
        bool ok = fn(details);
        r.status = ok ? "pass" : "fail";
        r.details = details;
    } catch (const std::exception& e) {
        r.status = "error";
        r.details = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    results_.push_back(std::move(r));
}

bool Report::all_passed() const {
    for (const CaseResult& r : results_)
        if (r.status != "pass") return false;
    return true;
}

namespace {

std::vector<CaseResult> sorted(const std::vector<CaseResult>& in) {
    std::vector<CaseResult> out = in;
    std::sort(out.begin(), out.end(), [](const CaseResult& a, const CaseResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        return a.id < b.id;
    });
    return out;
}

}  // namespace

std::string Report::to_json(bool with_timing) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CaseResult& r : sorted(results_)) {
        arr.push_back({{"suite", r.suite},
                       {"case", r.id},
                       {"status", r.status},
                       {"runtime_ms", with_timing ? r.runtime_ms : 0},
                       {"details", r.details}});
    }
    return arr.dump(2) + "\n";
}

std::string Report::to_text(bool with_timing) const {
    std::ostringstream out;
    for (const CaseResult& r : sorted(results_)) {
        out << (r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "ERROR")) << " "
            << r.suite << "/" << r.id;
        if (with_timing) out << " (" << r.runtime_ms << " ms)";
        if (!r.details.empty() && r.status != "pass") out << "\n    " << r.details;
        out << "\n";
    }
    return out.str();
}

}  // namespace soergel
